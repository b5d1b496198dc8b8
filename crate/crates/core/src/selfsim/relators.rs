use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::presentation::NamedSquare;

/// Letters `x1 … x2n` of a family with `x_{i+n} = x_i⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseNumbering {
    families: BTreeMap<String, u32>,
}

impl InverseNumbering {
    /// `(family prefix, n)` pairs.
    pub fn new<S: Into<String>>(families: impl IntoIterator<Item = (S, u32)>) -> Self {
        InverseNumbering {
            families: families.into_iter().map(|(f, n)| (f.into(), n)).collect(),
        }
    }

    /// Families `a`, `b`, `c` with 2, 3 and 4 generators.
    pub fn abc() -> Self {
        InverseNumbering::new([("a", 2), ("b", 3), ("c", 4)])
    }

    fn split<'a>(&self, letter: &'a str) -> Result<(&'a str, u32, u32)> {
        let digits = letter.trim_start_matches(|c: char| !c.is_ascii_digit());
        let family = &letter[..letter.len() - digits.len()];
        let n = *self
            .families
            .get(family)
            .ok_or_else(|| Error::UnknownLetter(letter.to_string()))?;
        let i: u32 = digits
            .parse()
            .map_err(|_| Error::UnknownLetter(letter.to_string()))?;
        if i == 0 || i > 2 * n {
            return Err(Error::UnknownLetter(letter.to_string()));
        }
        Ok((family, i, n))
    }

    pub fn family<'a>(&self, letter: &'a str) -> Result<&'a str> {
        Ok(self.split(letter)?.0)
    }

    pub fn inverse(&self, letter: &str) -> Result<String> {
        let (family, i, n) = self.split(letter)?;
        Ok(format!("{family}{}", if i <= n { i + n } else { i - n }))
    }

    /// All `2n` letters of a family in numeric order.
    pub fn letters(&self, family: &str) -> Vec<String> {
        let n = self.families.get(family).copied().unwrap_or(0);
        (1..=2 * n).map(|i| format!("{family}{i}")).collect()
    }
}

/// Splits `b1c1b5c4` into `["b1", "c1", "b5", "c4"]`.
pub fn split_relator(relator: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in relator.chars().filter(|c| !c.is_whitespace()) {
        if !c.is_ascii_digit() && cur.chars().last().is_some_and(|l| l.is_ascii_digit()) {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(c);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    if out
        .iter()
        .any(|l| !l.chars().last().is_some_and(|c| c.is_ascii_digit()))
    {
        return Err(Error::Relator(
            relator.into(),
            "letters must end in an index".into(),
        ));
    }
    Ok(out)
}

/// Squares from relators `x y x' y' = 1`, each read as `x·y = y'⁻¹·x'⁻¹`
/// together with its three companions
/// `x'·y' = y⁻¹·x⁻¹`, `x'⁻¹·y⁻¹ = y'·x` and `x⁻¹·y'⁻¹ = y·x'`.
/// Every square is returned with the left letter from the family of `x`.
pub fn relators_to_squares(
    relators: &[&str],
    numbering: &InverseNumbering,
) -> Result<Vec<NamedSquare>> {
    let mut map: BTreeMap<(String, String), (String, String)> = BTreeMap::new();
    for relator in relators {
        let letters = split_relator(relator)?;
        let [x, y, x2, y2] = letters.as_slice() else {
            return Err(Error::Relator(
                relator.to_string(),
                format!("expected 4 letters, found {}", letters.len()),
            ));
        };
        let (fx, fy) = (numbering.family(x)?, numbering.family(y)?);
        if fx == fy || numbering.family(x2)? != fx || numbering.family(y2)? != fy {
            return Err(Error::Relator(
                relator.to_string(),
                "letters must alternate between two families".into(),
            ));
        }
        let inv = |l: &str| numbering.inverse(l);
        let squares = [
            (x.clone(), y.clone(), inv(y2)?, inv(x2)?),
            (x2.clone(), y2.clone(), inv(y)?, inv(x)?),
            (inv(x2)?, inv(y)?, y2.clone(), x.clone()),
            (inv(x)?, inv(y2)?, y.clone(), x2.clone()),
        ];
        for (u, v, v2, u2) in squares {
            if let Some(prev) = map.insert((u.clone(), v.clone()), (v2.clone(), u2.clone())) {
                if prev != (v2, u2) {
                    return Err(Error::ConflictingSquare(u, v));
                }
            }
        }
    }
    Ok(map
        .into_iter()
        .map(|((u, v), (v2, u2))| (u, v, v2, u2))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbering() {
        let n = InverseNumbering::abc();
        assert_eq!(n.inverse("b5").unwrap(), "b2");
        assert_eq!(n.inverse("c4").unwrap(), "c8");
        assert_eq!(n.inverse("a1").unwrap(), "a3");
        assert!(n.inverse("c9").is_err());
        assert!(n.inverse("d1").is_err());
        assert_eq!(n.letters("a"), vec!["a1", "a2", "a3", "a4"]);
    }

    #[test]
    fn splitting() {
        assert_eq!(
            split_relator("b1c1b5c4").unwrap(),
            vec!["b1", "c1", "b5", "c4"]
        );
        assert_eq!(split_relator("x12y3").unwrap(), vec!["x12", "y3"]);
        assert!(split_relator("b1c").is_err());
    }

    #[test]
    fn single_relator() {
        let sq = relators_to_squares(&["b1c1b5c4"], &InverseNumbering::abc()).unwrap();
        assert_eq!(sq.len(), 4);
        assert!(sq.contains(&("b1".into(), "c1".into(), "c8".into(), "b2".into())));
        let sq = relators_to_squares(&["a1c1a2c8"], &InverseNumbering::abc()).unwrap();
        assert!(sq.contains(&("a1".into(), "c1".into(), "c4".into(), "a4".into())));
    }

    #[test]
    fn malformed_relators() {
        let n = InverseNumbering::abc();
        assert!(matches!(
            relators_to_squares(&["b1b2c1c2"], &n),
            Err(Error::Relator(..))
        ));
        assert!(matches!(
            relators_to_squares(&["b1c1b2"], &n),
            Err(Error::Relator(..))
        ));
        assert!(matches!(
            relators_to_squares(&["b1c1b5c4", "b1c1b5c3"], &n),
            Err(Error::ConflictingSquare(..))
        ));
    }
}
