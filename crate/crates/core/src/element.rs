//! Elements of a k-monoid in normal form.
//!
//! An element is stored as the word `w₁w₂⋯w_k` with `w_i` over the alphabet
//! of color `i`, which is the unique factorization `s = s₁⋯s_k` through the
//! single-color submonoids. Products are computed by sorting the
//! concatenated word into ascending color order with square rewrites.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{Color, Degree};
use crate::presentation::{LetterId, Presentation};

#[derive(Clone)]
pub struct Element {
    pres: Arc<Presentation>,
    letters: Vec<LetterId>,
}

impl Element {
    /// The identity ε.
    pub fn identity(pres: &Arc<Presentation>) -> Element {
        Element {
            pres: Arc::clone(pres),
            letters: Vec::new(),
        }
    }

    /// A single atom.
    pub fn atom(pres: &Arc<Presentation>, letter: LetterId) -> Element {
        Element {
            pres: Arc::clone(pres),
            letters: vec![letter],
        }
    }

    /// Normal form of the product of `letters`, taken in any color order.
    ///
    /// Repeatedly rewrites the leftmost adjacent pair `uv` with
    /// `color(u) > color(v)` by its square `v'u'` until colors ascend.
    pub fn from_word(pres: &Arc<Presentation>, letters: &[LetterId]) -> Result<Element> {
        let mut w = letters.to_vec();
        if let Some(bad) = w.iter().find(|l| l.index() >= pres.letter_count()) {
            return Err(Error::UnknownLetter(format!("#{}", bad.index())));
        }
        sort_colors(pres, &mut w)?;
        Ok(Element {
            pres: Arc::clone(pres),
            letters: w,
        })
    }

    pub fn from_names<S: AsRef<str>>(pres: &Arc<Presentation>, names: &[S]) -> Result<Element> {
        let ids = names
            .iter()
            .map(|n| pres.id(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Element::from_word(pres, &ids)
    }

    /// Builds an element from one word per color. Words are taken as they
    /// are: each `words[i]` must be over the alphabet of color `i + 1`.
    pub fn from_color_words(pres: &Arc<Presentation>, words: &[Vec<LetterId>]) -> Result<Element> {
        if words.len() != pres.k() {
            return Err(Error::Dimension {
                expected: pres.k(),
                found: words.len(),
            });
        }
        for (slot, word) in words.iter().enumerate() {
            for &l in word {
                if l.index() >= pres.letter_count() || pres.color(l).slot() != slot {
                    return Err(Error::Contract(format!(
                        "letter #{} is not in alphabet {}",
                        l.index(),
                        slot + 1
                    )));
                }
            }
        }
        Ok(Element {
            pres: Arc::clone(pres),
            letters: words.concat(),
        })
    }

    /// Trusted constructor for words already in ascending color order.
    pub(crate) fn from_sorted(pres: &Arc<Presentation>, letters: Vec<LetterId>) -> Element {
        debug_assert!(letters
            .windows(2)
            .all(|p| pres.color(p[0]) <= pres.color(p[1])));
        Element {
            pres: Arc::clone(pres),
            letters,
        }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    /// The normal form as one flat word.
    pub fn letters(&self) -> &[LetterId] {
        &self.letters
    }

    /// The normal form split by color.
    pub fn words(&self) -> Vec<&[LetterId]> {
        let mut out = Vec::with_capacity(self.pres.k());
        let mut start = 0;
        for slot in 0..self.pres.k() {
            let len = self.letters[start..]
                .iter()
                .take_while(|&&l| self.pres.color(l).slot() == slot)
                .count();
            out.push(&self.letters[start..start + len]);
            start += len;
        }
        out
    }

    pub fn degree(&self) -> Degree {
        let mut d = vec![0u32; self.pres.k()];
        for &l in &self.letters {
            d[self.pres.color(l).slot()] += 1;
        }
        Degree::new(d)
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of atoms, i.e. the total of the degree.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn same_presentation(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) || *self.pres == *other.pres
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.same_presentation(other) {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    pub fn multiply(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        if other.is_empty() {
            return Ok(self.clone());
        }
        if self.is_empty() {
            return Ok(other.clone());
        }
        let mut w = Vec::with_capacity(self.len() + other.len());
        w.extend_from_slice(&self.letters);
        w.extend_from_slice(&other.letters);
        sort_colors(&self.pres, &mut w)?;
        Ok(Element {
            pres: Arc::clone(&self.pres),
            letters: w,
        })
    }

    /// Splits `x = x₁x₂` with `degree(x₁) = m`.
    ///
    /// Pops `m₁` atoms of color 1, then `m₂` of color 2, and so on; the
    /// popped atoms already form a normal form.
    pub fn factor(&self, m: &Degree) -> Result<(Element, Element)> {
        let deg = self.degree();
        if !m.leq(&deg)? {
            return Err(Error::FactorizationRange {
                requested: m.to_string(),
                available: deg.to_string(),
            });
        }
        let mut rest = self.letters.clone();
        let mut head = Vec::with_capacity(m.total() as usize);
        for slot in 0..self.pres.k() {
            for _ in 0..m.components()[slot] {
                head.push(pop_front(&self.pres, &mut rest, slot)?);
            }
        }
        Ok((
            Element::from_sorted(&self.pres, head),
            Element::from_sorted(&self.pres, rest),
        ))
    }

    /// Left factor of degree `m`.
    pub fn prefix(&self, m: &Degree) -> Result<Element> {
        Ok(self.factor(m)?.0)
    }

    /// Writes `x = a·rest` with `a` an atom of the given color.
    pub fn pop_atom(&self, color: Color) -> Result<(LetterId, Element)> {
        if color.index() > self.pres.k() {
            return Err(Error::ColorOutOfRange {
                color: color.index(),
                k: self.pres.k(),
            });
        }
        let mut rest = self.letters.clone();
        let a = pop_front(&self.pres, &mut rest, color.slot())?;
        Ok((a, Element::from_sorted(&self.pres, rest)))
    }

    /// Given `xy = uv` with `degree(x) ≥ degree(u)`, returns the `t` with
    /// `x = ut` and `v = ty`.
    pub fn levi_interpolant(x: &Element, y: &Element, u: &Element, v: &Element) -> Result<Element> {
        x.check_same(y)?;
        x.check_same(u)?;
        x.check_same(v)?;
        if x.multiply(y)? != u.multiply(v)? {
            return Err(Error::Contract("xy != uv".into()));
        }
        if !u.degree().leq(&x.degree())? {
            return Err(Error::Contract(format!(
                "degree(x) = {} is not above degree(u) = {}",
                x.degree(),
                u.degree()
            )));
        }
        let (head, t) = x.factor(&u.degree())?;
        if head != *u {
            return Err(Error::Contract("u is not a prefix of x".into()));
        }
        Ok(t)
    }

    /// Letters joined by spaces, `ε` for the identity.
    pub fn to_inline(&self) -> String {
        if self.is_empty() {
            return "ε".to_string();
        }
        self.letters
            .iter()
            .map(|&l| self.pres.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// One `color i: ...` line per color.
    pub fn to_color_lines(&self) -> Vec<String> {
        self.words()
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let names: Vec<&str> = w.iter().map(|&l| self.pres.name(l)).collect();
                if names.is_empty() {
                    format!("color {}:", i + 1)
                } else {
                    format!("color {}: {}", i + 1, names.join(" "))
                }
            })
            .collect()
    }
}

/// Bubble the word into ascending color order, leftmost descending pair
/// first.
fn sort_colors(pres: &Presentation, w: &mut [LetterId]) -> Result<()> {
    let mut i = 0;
    while i + 1 < w.len() {
        let (u, v) = (w[i], w[i + 1]);
        if pres.color(u) > pres.color(v) {
            let (v2, u2) = pres.square(u, v).ok_or_else(|| {
                Error::Contract(format!(
                    "no square for ({}, {})",
                    pres.name(u),
                    pres.name(v)
                ))
            })?;
            w[i] = v2;
            w[i + 1] = u2;
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    Ok(())
}

/// Removes the first letter of color `slot` from a normal form word and
/// commutes it to the front. The word left behind stays in normal form.
fn pop_front(pres: &Presentation, w: &mut Vec<LetterId>, slot: usize) -> Result<LetterId> {
    let pos = w
        .iter()
        .position(|&l| pres.color(l).slot() == slot)
        .ok_or(Error::EmptyColor(slot + 1))?;
    let mut v = w.remove(pos);
    for j in (0..pos).rev() {
        let u = w[j];
        let (v2, u2) = pres.square(u, v).ok_or_else(|| {
            Error::Contract(format!(
                "no square for ({}, {})",
                pres.name(u),
                pres.name(v)
            ))
        })?;
        w[j] = u2;
        v = v2;
    }
    Ok(v)
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

/// Shortlex in letter-id order: shorter elements first, then
/// lexicographic.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]", self.to_inline())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_inline())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn el(p: &Arc<Presentation>, s: &str) -> Element {
        let names: Vec<&str> = s.split_whitespace().collect();
        Element::from_names(p, &names).unwrap()
    }

    fn deg(v: &[u32]) -> Degree {
        Degree::new(v.to_vec())
    }

    /// A 2-monoid with the single non-commuting square aα = α₁a₁ (and its
    /// dual a₁α₁ = αa so the map stays mutually inverse).
    fn twisted() -> Arc<Presentation> {
        let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        Arc::new(
            Presentation::builder(vec![names(&["a", "a1"]), names(&["α", "α1"])])
                .square("a", "α", "α1", "a1")
                .square("a1", "α1", "α", "a")
                .commute_rest()
                .build()
                .unwrap(),
        )
    }

    #[test]
    fn degrees() {
        let p = Arc::new(fixtures::prod22());
        assert_eq!(Element::identity(&p).degree(), deg(&[0, 0]));
        assert_eq!(el(&p, "a b α β β").degree(), deg(&[2, 3]));
        assert_eq!(el(&p, "β").degree(), Degree::basis(2, 2).unwrap());
    }

    #[test]
    fn scam_word_normalizes() {
        let p = Arc::new(fixtures::prod22());
        let x = el(&p, "α a β b β");
        assert_eq!(x.to_color_lines(), vec!["color 1: a b", "color 2: α β β"]);
        assert_eq!(x, el(&p, "a b α β β"));
    }

    #[test]
    fn sorted_input_is_unchanged() {
        let p = twisted();
        let ids = vec![p.id("a").unwrap(), p.id("a1").unwrap(), p.id("α").unwrap()];
        assert_eq!(Element::from_word(&p, &ids).unwrap().letters(), &ids[..]);
    }

    #[test]
    fn unknown_letter() {
        let p = Arc::new(fixtures::prod22());
        assert_eq!(
            Element::from_names(&p, &["a", "q"]).unwrap_err(),
            Error::UnknownLetter("q".into())
        );
    }

    #[test]
    fn multiply_examples() {
        let p = Arc::new(fixtures::prod22());
        let x = el(&p, "a α");
        let e = Element::identity(&p);
        assert_eq!(x.multiply(&e).unwrap(), x);
        assert_eq!(e.multiply(&x).unwrap(), x);
        assert_eq!(x.multiply(&el(&p, "b β")).unwrap(), el(&p, "a b α β"));

        let t = twisted();
        let prod = el(&t, "a").multiply(&el(&t, "α")).unwrap();
        assert_eq!(prod.to_inline(), "a α");
        // α·a is descending and gets rewritten through the dual square
        let prod = el(&t, "α1").multiply(&el(&t, "a1")).unwrap();
        assert_eq!(prod.to_inline(), "a α");
        let prod = el(&t, "α").multiply(&el(&t, "a")).unwrap();
        assert_eq!(prod.to_inline(), "a1 α1");
    }

    #[test]
    fn squares_execute_as_products() {
        // for cross-color atoms u, v the product uv has normal form v'u'
        // when color(u) > color(v)
        let t = twisted();
        for ((u, v), (v2, u2)) in t.squares().entries() {
            let prod = Element::atom(&t, u)
                .multiply(&Element::atom(&t, v))
                .unwrap();
            if t.color(u) > t.color(v) {
                assert_eq!(prod.letters(), &[v2, u2]);
            } else {
                assert_eq!(prod.letters(), &[u, v]);
            }
        }
    }

    #[test]
    fn multiply_across_presentations_fails() {
        let p = Arc::new(fixtures::prod22());
        let q = twisted();
        assert_eq!(
            el(&p, "a").multiply(&el(&q, "a")).unwrap_err(),
            Error::PresentationMismatch
        );
    }

    #[test]
    fn factor_examples() {
        let p = Arc::new(fixtures::prod22());
        let x = el(&p, "a b α β β");
        let e = Element::identity(&p);
        assert_eq!(x.factor(&deg(&[0, 0])).unwrap(), (e.clone(), x.clone()));
        assert_eq!(x.factor(&deg(&[2, 3])).unwrap(), (x.clone(), e));
        let (x1, x2) = x.factor(&deg(&[1, 1])).unwrap();
        assert_eq!(x1, el(&p, "a α"));
        assert_eq!(x2, el(&p, "b β β"));
        assert!(matches!(
            x.factor(&deg(&[3, 0])),
            Err(Error::FactorizationRange { .. })
        ));
        assert!(matches!(x.factor(&deg(&[1])), Err(Error::Dimension { .. })));
    }

    #[test]
    fn pop_atom_examples() {
        let p = Arc::new(fixtures::prod22());
        let x = el(&p, "a b α β");
        let (a, rest) = x.pop_atom(Color::new(1, 2).unwrap()).unwrap();
        assert_eq!(p.name(a), "a");
        assert_eq!(rest, el(&p, "b α β"));
        let (a, rest) = x.pop_atom(Color::new(2, 2).unwrap()).unwrap();
        assert_eq!(p.name(a), "α");
        assert_eq!(rest, el(&p, "a b β"));
        let y = el(&p, "a b");
        assert_eq!(
            y.pop_atom(Color::new(2, 2).unwrap()).unwrap_err(),
            Error::EmptyColor(2)
        );

        let t = twisted();
        let (a, rest) = el(&t, "a α").pop_atom(Color::new(2, 2).unwrap()).unwrap();
        assert_eq!(t.name(a), "α1");
        assert_eq!(rest, el(&t, "a1"));
    }

    #[test]
    fn levi_examples() {
        let p = Arc::new(fixtures::prod22());
        let x = el(&p, "a b α");
        let y = el(&p, "β");
        let e = Element::identity(&p);
        assert_eq!(Element::levi_interpolant(&x, &y, &x, &y).unwrap(), e);
        let u = el(&p, "a");
        let v = el(&p, "b α β");
        let t = Element::levi_interpolant(&x, &y, &u, &v).unwrap();
        assert_eq!(t, el(&p, "b α"));
        assert_eq!(u.multiply(&t).unwrap(), x);
        assert_eq!(t.multiply(&y).unwrap(), v);
        // precondition violations
        assert!(matches!(
            Element::levi_interpolant(&u, &v, &x, &y),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            Element::levi_interpolant(&x, &y, &u, &y),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn words_split_by_color() {
        let p = Arc::new(fixtures::nk(3).unwrap());
        let x = el(&p, "e a c c");
        let words: Vec<Vec<&str>> = x
            .words()
            .iter()
            .map(|w| w.iter().map(|&l| p.name(l)).collect())
            .collect();
        assert_eq!(words, vec![vec!["a"], vec!["c", "c"], vec!["e"]]);
        let rebuilt = Element::from_color_words(
            &p,
            &x.words().iter().map(|w| w.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(rebuilt, x);
        assert!(
            Element::from_color_words(&p, &[vec![p.id("c").unwrap()], vec![], vec![]]).is_err()
        );
    }
}
