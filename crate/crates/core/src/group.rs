//! The group of a k-monoid: bijections between maximal generalized prefix
//! codes, composed and compared by refining both sides to a common degree.
//!
//! A bijection `θ: X → Y` acts on `XS` by `θ(x·s) = θ(x)·s`. Refining to
//! `C_m` for `m ≥ ∨δ(X)` replaces `θ` by its restriction to `C_m`, which
//! names the same group element. For the free monoid on `{a, b}` this is
//! Thompson's group `V`, and for a product of two such monoids it is `2V`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::codes::{enumerate_degree, expand_code, Code, DivisorIndex};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::lattice::{Color, Degree};
use crate::presentation::Presentation;

/// A bijection between two prefix codes, stored as sorted `domain ↦ range`
/// pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeBijection {
    pres: Arc<Presentation>,
    map: BTreeMap<Element, Element>,
}

impl CodeBijection {
    /// Checks that domain and range are prefix codes of the same size with
    /// no repeats.
    pub fn new(pres: &Arc<Presentation>, pairs: Vec<(Element, Element)>) -> Result<Self> {
        let n = pairs.len();
        let (dom, ran): (Vec<Element>, Vec<Element>) = pairs.iter().cloned().unzip();
        let dom = Code::new(pres, dom)?;
        let ran = Code::new(pres, ran)?;
        if dom.len() != n || ran.len() != n {
            return Err(Error::Bijection("repeated domain or range element".into()));
        }
        Ok(CodeBijection {
            pres: Arc::clone(pres),
            map: pairs.into_iter().collect(),
        })
    }

    fn from_map(pres: &Arc<Presentation>, map: BTreeMap<Element, Element>) -> Self {
        CodeBijection {
            pres: Arc::clone(pres),
            map,
        }
    }

    /// Lines `d… -> r…`, `ε` for the identity.
    pub fn parse(pres: &Arc<Presentation>, text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (n, line) in crate::format::content_lines(text) {
            let (d, r) = line.split_once("->").ok_or_else(|| Error::Syntax {
                line: n,
                message: "expected `domain -> range`".into(),
            })?;
            let d = Element::from_names(pres, &crate::format::word_tokens(d))?;
            let r = Element::from_names(pres, &crate::format::word_tokens(r))?;
            pairs.push((d, r));
        }
        CodeBijection::new(pres, pairs)
    }

    pub fn render(&self) -> String {
        self.map
            .iter()
            .map(|(d, r)| format!("{} -> {}\n", d.to_inline(), r.to_inline()))
            .collect()
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Element, &Element)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn domain(&self) -> Code {
        Code::from_unchecked(&self.pres, self.map.keys().cloned().collect())
            .expect("members share the presentation")
    }

    pub fn range(&self) -> Code {
        Code::from_unchecked(&self.pres, self.map.values().cloned().collect())
            .expect("members share the presentation")
    }

    /// Both domain and range are maximal.
    pub fn is_essential(&self) -> Result<bool> {
        Ok(self.domain().is_maximal()? && self.range().is_maximal()?)
    }

    fn require_essential(&self) -> Result<()> {
        if !self.domain().is_maximal()? {
            return Err(Error::NotEssential("domain"));
        }
        if !self.range().is_maximal()? {
            return Err(Error::NotEssential("range"));
        }
        Ok(())
    }

    /// `θ(x)` for `x ∈ XS`, `None` outside it.
    pub fn apply(&self, x: &Element) -> Result<Option<Element>> {
        let keys: Vec<Element> = self.map.keys().cloned().collect();
        let index = DivisorIndex::new(&keys);
        self.apply_indexed(&index, &keys, x)
    }

    fn apply_indexed(
        &self,
        index: &DivisorIndex,
        keys: &[Element],
        x: &Element,
    ) -> Result<Option<Element>> {
        match index.find(x)? {
            None => Ok(None),
            Some((i, s)) => Ok(Some(self.map[&keys[i]].multiply(&s)?)),
        }
    }

    pub fn inverse(&self) -> CodeBijection {
        CodeBijection::from_map(
            &self.pres,
            self.map
                .iter()
                .map(|(d, r)| (r.clone(), d.clone()))
                .collect(),
        )
    }

    /// `∨ δ(X)` over the domain.
    pub fn domain_degree(&self) -> Degree {
        self.domain().degree_join()
    }

    pub fn range_degree(&self) -> Degree {
        self.range().degree_join()
    }

    /// The restriction of `θ` to `C_m`. Needs `m ≥ ∨δ(X)` and a maximal
    /// domain.
    pub fn refine_to(&self, m: &Degree) -> Result<CodeBijection> {
        let required = self.domain_degree();
        if !required.leq(m)? {
            return Err(Error::Refinement {
                requested: m.to_string(),
                required: required.to_string(),
            });
        }
        let keys: Vec<Element> = self.map.keys().cloned().collect();
        let index = DivisorIndex::new(&keys);
        let mut map = BTreeMap::new();
        for c in enumerate_degree(&self.pres, m)?.iter() {
            let image = self
                .apply_indexed(&index, &keys, c)?
                .ok_or(Error::NotEssential("domain"))?;
            map.insert(c.clone(), image);
        }
        Ok(CodeBijection::from_map(&self.pres, map))
    }

    /// `φ ∘ θ`: first `θ`, then `self = φ`. Both must be essential.
    pub fn compose(&self, theta: &CodeBijection) -> Result<CodeBijection> {
        if !Arc::ptr_eq(&self.pres, &theta.pres) && *self.pres != *theta.pres {
            return Err(Error::PresentationMismatch);
        }
        self.require_essential()?;
        theta.require_essential()?;
        let m = theta.range_degree().join(&self.domain_degree())?;
        let inv = theta.inverse();
        let inv_keys: Vec<Element> = inv.map.keys().cloned().collect();
        let inv_index = DivisorIndex::new(&inv_keys);
        let keys: Vec<Element> = self.map.keys().cloned().collect();
        let index = DivisorIndex::new(&keys);
        let mut map = BTreeMap::new();
        for c in enumerate_degree(&self.pres, &m)?.iter() {
            let pre = inv
                .apply_indexed(&inv_index, &inv_keys, c)?
                .ok_or(Error::NotEssential("range"))?;
            let post = self
                .apply_indexed(&index, &keys, c)?
                .ok_or(Error::NotEssential("domain"))?;
            map.insert(pre, post);
        }
        Ok(CodeBijection::from_map(&self.pres, map))
    }

    /// Equality in the group: both sides agree on `C_m` for
    /// `m = ∨δ(X) ∨ ∨δ(X')`.
    pub fn equal_in_group(&self, other: &CodeBijection) -> Result<bool> {
        if !Arc::ptr_eq(&self.pres, &other.pres) && *self.pres != *other.pres {
            return Err(Error::PresentationMismatch);
        }
        self.require_essential()?;
        other.require_essential()?;
        let m = self.domain_degree().join(&other.domain_degree())?;
        Ok(self.refine_to(&m)? == other.refine_to(&m)?)
    }

    pub fn is_identity(&self) -> Result<bool> {
        self.equal_in_group(&identity_element(&self.pres)?)
    }
}

impl fmt::Debug for CodeBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.map.iter()).finish()
    }
}

impl fmt::Display for CodeBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `{ε ↦ ε}`. Defined for strict presentations.
pub fn identity_element(pres: &Arc<Presentation>) -> Result<CodeBijection> {
    if let Some(c) = pres.empty_color() {
        return Err(Error::NotStrict(c.index()));
    }
    let e = Element::identity(pres);
    Ok(CodeBijection::from_map(
        pres,
        BTreeMap::from([(e.clone(), e)]),
    ))
}

/// A maximal code from `{ε}` by `expansions` random single-member
/// expansions.
pub fn random_maximal_code<R: Rng>(
    pres: &Arc<Presentation>,
    expansions: usize,
    rng: &mut R,
) -> Result<Code> {
    if let Some(c) = pres.empty_color() {
        return Err(Error::NotStrict(c.index()));
    }
    let mut code = Code::new(pres, vec![Element::identity(pres)])?;
    for _ in 0..expansions {
        let x = code.elements()[rng.gen_range(0..code.len())].clone();
        let color = Color::new(rng.gen_range(1..=pres.k()), pres.k())?;
        code = expand_code(&code, &x, color)?;
    }
    Ok(code)
}

/// A random essential bijection between two random maximal codes of equal
/// size, each built with at most `max_expansions` expansions.
pub fn random_bijection<R: Rng>(
    pres: &Arc<Presentation>,
    max_expansions: usize,
    rng: &mut R,
) -> Result<CodeBijection> {
    loop {
        let dom = random_maximal_code(pres, rng.gen_range(0..=max_expansions), rng)?;
        for _ in 0..32 {
            let ran = random_maximal_code(pres, rng.gen_range(0..=max_expansions), rng)?;
            if ran.len() == dom.len() {
                let mut targets = ran.elements().to_vec();
                targets.shuffle(rng);
                let pairs = dom.elements().iter().cloned().zip(targets).collect();
                return CodeBijection::new(pres, pairs);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn free_ab() -> Arc<Presentation> {
        Arc::new(fixtures::free_ab())
    }

    fn bij(p: &Arc<Presentation>, text: &str) -> CodeBijection {
        CodeBijection::parse(p, text).unwrap()
    }

    #[test]
    fn parse_and_render() {
        let p = free_ab();
        let t = bij(&p, "a -> b\nb -> a\n");
        assert_eq!(t.render(), "a -> b\nb -> a\n");
        assert!(t.is_essential().unwrap());
        assert!(matches!(
            CodeBijection::parse(&p, "a -> a\na b -> b\n"),
            Err(Error::NotPrefixCode(..))
        ));
        assert!(matches!(
            CodeBijection::parse(&p, "a b\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn identity_and_refinement() {
        let p = free_ab();
        let id = identity_element(&p).unwrap();
        let r = id.refine_to(&Degree::new(vec![2])).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r.pairs().all(|(d, x)| d == x));
        assert!(id.equal_in_group(&r).unwrap());
        let t = bij(&p, "a -> b\nb -> a\n");
        assert!(matches!(
            bij(&p, "a a -> a\na b -> b a\nb -> b b\n").refine_to(&Degree::new(vec![1])),
            Err(Error::Refinement { .. })
        ));
        assert!(!t.is_identity().unwrap());
    }

    #[test]
    fn swap_squares_to_identity() {
        let p = free_ab();
        let t = bij(&p, "a -> b\nb -> a\n");
        assert!(t.compose(&t).unwrap().is_identity().unwrap());
    }

    #[test]
    fn compose_with_inverse() {
        let p = free_ab();
        let t = bij(&p, "a a -> a\na b -> b a\nb -> b b\n");
        assert!(t.compose(&t.inverse()).unwrap().is_identity().unwrap());
        assert!(t.inverse().compose(&t).unwrap().is_identity().unwrap());
        assert!(!t.compose(&t).unwrap().is_identity().unwrap());
    }

    #[test]
    fn apply_on_the_ideal() {
        let p = free_ab();
        let t = bij(&p, "a a -> a\na b -> b a\nb -> b b\n");
        let x = Element::from_names(&p, &["a", "b", "b"]).unwrap();
        assert_eq!(t.apply(&x).unwrap().unwrap().to_inline(), "b a b");
        let partial = bij(&p, "a a -> b\n");
        assert_eq!(
            partial
                .apply(&Element::from_names(&p, &["b"]).unwrap())
                .unwrap(),
            None
        );
    }

    #[test]
    fn non_essential_elements_are_rejected() {
        let p = free_ab();
        let partial = bij(&p, "a -> b\n");
        assert_eq!(
            partial.compose(&partial).unwrap_err(),
            Error::NotEssential("domain")
        );
        let id = identity_element(&p).unwrap();
        assert!(partial.equal_in_group(&id).is_err());
    }

    #[test]
    fn two_colors_commute_between_factors() {
        let p = Arc::new(fixtures::prod22());
        let x = bij(&p, "a -> b\nb -> a\n");
        let y = bij(&p, "α -> β\nβ -> α\n");
        assert!(x.is_essential().unwrap() && y.is_essential().unwrap());
        let xy = x.compose(&y).unwrap();
        let yx = y.compose(&x).unwrap();
        assert!(xy.equal_in_group(&yx).unwrap());
        assert!(!xy.is_identity().unwrap());
    }

    #[test]
    fn random_bijections_are_essential() {
        let p = Arc::new(fixtures::prod22());
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let t = random_bijection(&p, 3, &mut rng).unwrap();
            assert!(t.is_essential().unwrap());
        }
    }
}
