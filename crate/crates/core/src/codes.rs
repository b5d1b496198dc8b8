//! Principal right ideals: divisibility, minimal common extensions and
//! generalized prefix codes.
//!
//! Two elements are comparable when `aS ∩ bS` is non-empty. Every minimal
//! common right multiple of `a` and `b` has degree `δ(a) ∨ δ(b)`, so all
//! questions about `aS ∩ bS` are settled by looking at that one degree.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::lattice::{Color, Degree};
use crate::presentation::{LetterId, Presentation};

/// A finite set of pairwise incomparable elements, kept sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Code {
    pres: Arc<Presentation>,
    elements: Vec<Element>,
}

impl Code {
    /// Checks pairwise incomparability.
    pub fn new(pres: &Arc<Presentation>, elements: Vec<Element>) -> Result<Code> {
        let code = Code::from_unchecked(pres, elements)?;
        for (i, a) in code.elements.iter().enumerate() {
            for b in &code.elements[i + 1..] {
                if is_comparable(a, b)? {
                    return Err(Error::NotPrefixCode(a.to_inline(), b.to_inline()));
                }
            }
        }
        Ok(code)
    }

    /// Sorts and deduplicates without the incomparability check.
    pub fn from_unchecked(pres: &Arc<Presentation>, mut elements: Vec<Element>) -> Result<Code> {
        for e in &elements {
            if !Arc::ptr_eq(e.presentation(), pres) && **e.presentation() != **pres {
                return Err(Error::PresentationMismatch);
            }
        }
        elements.sort();
        elements.dedup();
        Ok(Code {
            pres: Arc::clone(pres),
            elements,
        })
    }

    /// Parses one element per line (see [`crate::format::parse_word_list`]).
    pub fn parse(pres: &Arc<Presentation>, text: &str) -> Result<Code> {
        let elements = crate::format::parse_word_list(text)
            .into_iter()
            .map(|(_, words)| Element::from_names(pres, &words))
            .collect::<Result<Vec<_>>>()?;
        Code::new(pres, elements)
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Element> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    /// `∨ δ(x)` over the members; `0` for the empty code.
    pub fn degree_join(&self) -> Degree {
        Degree::join_all(
            self.pres.k(),
            self.elements
                .iter()
                .map(|e| e.degree())
                .collect::<Vec<_>>()
                .iter(),
        )
        .expect("members share the presentation's k")
    }

    pub fn is_maximal(&self) -> Result<bool> {
        is_maximal_code(self)
    }

    /// The member dividing `x`, with the quotient. At most one member can
    /// divide `x` in a prefix code.
    pub fn divisor_of(&self, x: &Element) -> Result<Option<(&Element, Element)>> {
        for d in &self.elements {
            if let Some(s) = divides(d, x)? {
                return Ok(Some((d, s)));
            }
        }
        Ok(None)
    }

    /// One line per member, `ε` for the identity.
    pub fn to_lines(&self) -> Vec<String> {
        self.elements.iter().map(Element::to_inline).collect()
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.elements).finish()
    }
}

impl<'a> IntoIterator for &'a Code {
    type Item = &'a Element;
    type IntoIter = std::slice::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// The `s` with `c = d·s`, if `d` is a left divisor of `c`.
pub fn divides(d: &Element, c: &Element) -> Result<Option<Element>> {
    if !d.same_presentation(c) {
        return Err(Error::PresentationMismatch);
    }
    if !d.degree().leq(&c.degree())? {
        return Ok(None);
    }
    let (head, rest) = c.factor(&d.degree())?;
    Ok((head == *d).then_some(rest))
}

/// All words of length `n` over `alphabet`, lexicographic.
fn words_of_length(alphabet: &[LetterId], n: usize) -> Vec<Vec<LetterId>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// `C_m`: every element of degree exactly `m`, as normal forms. Its size is
/// `Π |X_i|^{m_i}`.
pub fn enumerate_degree(pres: &Arc<Presentation>, m: &Degree) -> Result<Code> {
    if m.k() != pres.k() {
        return Err(Error::Dimension {
            expected: pres.k(),
            found: m.k(),
        });
    }
    let mut combos: Vec<Vec<LetterId>> = vec![Vec::new()];
    for (slot, &n) in m.components().iter().enumerate() {
        let words = words_of_length(&pres.alphabets()[slot], n as usize);
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                words.iter().map(move |w| {
                    let mut p = prefix.clone();
                    p.extend_from_slice(w);
                    p
                })
            })
            .collect();
    }
    Ok(Code {
        pres: Arc::clone(pres),
        elements: combos
            .into_iter()
            .map(|w| Element::from_sorted(pres, w))
            .collect(),
    })
}

/// Every element of degree `≤ bound`.
pub fn enumerate_below(pres: &Arc<Presentation>, bound: &Degree) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for m in bound.below() {
        out.extend(enumerate_degree(pres, &m)?.elements);
    }
    Ok(out)
}

/// `a ⊔ b`: the common right multiples of `a` and `b` of degree
/// `δ(a) ∨ δ(b)`. Empty iff `aS ∩ bS = ∅`.
pub fn common_upper(a: &Element, b: &Element) -> Result<Code> {
    if !a.same_presentation(b) {
        return Err(Error::PresentationMismatch);
    }
    let pres = a.presentation();
    let meet = a.degree().meet(&b.degree())?;
    if a.prefix(&meet)? != b.prefix(&meet)? {
        return Code::from_unchecked(pres, Vec::new());
    }
    let join = a.degree().join(&b.degree())?;
    let gap = join
        .diff(&a.degree())?
        .expect("join dominates both operands");
    let mut found = Vec::new();
    for x in enumerate_degree(pres, &gap)?.iter() {
        let c = a.multiply(x)?;
        if divides(b, &c)?.is_some() {
            found.push(c);
        }
    }
    Code::from_unchecked(pres, found)
}

pub fn is_comparable(a: &Element, b: &Element) -> Result<bool> {
    // cheap exits: a prefix relation or equal degrees decide it at once
    let (da, db) = (a.degree(), b.degree());
    if da.leq(&db)? {
        return Ok(divides(a, b)?.is_some() || !common_upper(a, b)?.is_empty());
    }
    if db.leq(&da)? {
        return Ok(divides(b, a)?.is_some() || !common_upper(a, b)?.is_empty());
    }
    Ok(!common_upper(a, b)?.is_empty())
}

/// True iff the elements are pairwise incomparable.
pub fn is_prefix_code(elements: &[Element]) -> Result<bool> {
    for (i, a) in elements.iter().enumerate() {
        for b in &elements[i + 1..] {
            if a == b || is_comparable(a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A prefix code `X` is maximal iff every element of `C_m`, with
/// `m = ∨ δ(X)`, has a left divisor in `X`. Only meaningful for strict
/// presentations.
pub fn is_maximal_code(code: &Code) -> Result<bool> {
    let pres = code.presentation();
    if let Some(c) = pres.empty_color() {
        return Err(Error::NotStrict(c.index()));
    }
    if code.is_empty() {
        return Ok(false);
    }
    let index = DivisorIndex::new(code.elements());
    let m = code.degree_join();
    for c in enumerate_degree(pres, &m)?.iter() {
        if index.find(c)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Replaces `x` by `{x·a : a ∈ X_i}`.
pub fn expand_code(code: &Code, x: &Element, color: Color) -> Result<Code> {
    let pres = code.presentation();
    if !code.contains(x) {
        return Err(Error::NotInCode(x.to_inline()));
    }
    if color.index() > pres.k() {
        return Err(Error::ColorOutOfRange {
            color: color.index(),
            k: pres.k(),
        });
    }
    if pres.alphabet(color).is_empty() {
        return Err(Error::NotStrict(color.index()));
    }
    let mut elements: Vec<Element> = code.iter().filter(|e| *e != x).cloned().collect();
    for &a in pres.alphabet(color) {
        elements.push(x.multiply(&Element::atom(pres, a))?);
    }
    Code::from_unchecked(pres, elements)
}

/// Finds the unique member of a prefix code dividing an element, by
/// checking each member degree once instead of each member.
#[derive(Debug, Clone)]
pub struct DivisorIndex {
    degrees: Vec<Degree>,
    members: HashMap<Element, usize>,
}

impl DivisorIndex {
    pub fn new(elements: &[Element]) -> Self {
        let mut degrees: Vec<Degree> = elements.iter().map(|e| e.degree()).collect();
        degrees.sort();
        degrees.dedup();
        let members = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        DivisorIndex { degrees, members }
    }

    /// Index of the member dividing `x` and the quotient.
    pub fn find(&self, x: &Element) -> Result<Option<(usize, Element)>> {
        let dx = x.degree();
        for d in &self.degrees {
            if d.leq(&dx)? {
                let (head, rest) = x.factor(d)?;
                if let Some(&i) = self.members.get(&head) {
                    return Ok(Some((i, rest)));
                }
            }
        }
        Ok(None)
    }
}

/// Outcome of [`alignment_probe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignmentReport {
    pub bound: Degree,
    /// Ordered pairs `(a, b)` with degrees `≤ bound` that are comparable.
    pub comparable_pairs: usize,
    /// Largest `|a ⊔ b|` seen.
    pub max_join_size: usize,
    /// A pair attaining the maximum, rendered inline.
    pub witness: Option<(String, String)>,
}

impl AlignmentReport {
    pub fn singly_aligned(&self) -> bool {
        self.max_join_size <= 1
    }
}

impl fmt::Display for AlignmentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bound: {}", self.bound)?;
        writeln!(f, "comparable pairs: {}", self.comparable_pairs)?;
        writeln!(f, "max |a ⊔ b|: {}", self.max_join_size)?;
        if let Some((a, b)) = &self.witness {
            writeln!(f, "witness: {a} / {b}")?;
        }
        writeln!(
            f,
            "singly aligned up to bound: {}",
            if self.singly_aligned() { "yes" } else { "no" }
        )
    }
}

/// Largest `|a ⊔ b|` over all pairs of degree `≤ bound`.
///
/// Rather than calling [`common_upper`] on every pair, each `c` of degree
/// `J ≤ bound` is split into its prefixes and counted once for every pair of
/// prefixes whose degrees join to `J`; the count for `(a, b)` is then exactly
/// `|a ⊔ b|`.
pub fn alignment_probe(pres: &Arc<Presentation>, bound: &Degree) -> Result<AlignmentReport> {
    if let Some(c) = pres.empty_color() {
        return Err(Error::NotStrict(c.index()));
    }
    if bound.k() != pres.k() {
        return Err(Error::Dimension {
            expected: pres.k(),
            found: bound.k(),
        });
    }
    let mut comparable_pairs = 0;
    let mut best: Option<(usize, Element, Element)> = None;
    for join in bound.below() {
        let below = join.below();
        let mut pairs = Vec::new();
        for (i, m) in below.iter().enumerate() {
            for (j, n) in below.iter().enumerate() {
                if m.join(n)? == join {
                    pairs.push((i, j));
                }
            }
        }
        let mut counts: HashMap<(usize, usize, Element, Element), usize> = HashMap::new();
        for c in enumerate_degree(pres, &join)?.iter() {
            let prefixes = below
                .iter()
                .map(|m| c.prefix(m))
                .collect::<Result<Vec<_>>>()?;
            for &(i, j) in &pairs {
                *counts
                    .entry((i, j, prefixes[i].clone(), prefixes[j].clone()))
                    .or_default() += 1;
            }
        }
        comparable_pairs += counts.len();
        let mut entries: Vec<_> = counts.into_iter().collect();
        entries.sort_by_key(|((_, _, a, b), _)| (a.clone(), b.clone()));
        for ((_, _, a, b), n) in entries {
            if best.as_ref().is_none_or(|(m, _, _)| n > *m) {
                best = Some((n, a, b));
            }
        }
    }
    Ok(AlignmentReport {
        bound: bound.clone(),
        comparable_pairs,
        max_join_size: best.as_ref().map_or(0, |b| b.0),
        witness: best.map(|(_, a, b)| (a.to_inline(), b.to_inline())),
    })
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

    fn free_ab() -> Arc<Presentation> {
        Arc::new(Presentation::free_monoid(&["a", "b"]).unwrap())
    }

    fn code(p: &Arc<Presentation>, words: &[&str]) -> Code {
        Code::new(p, words.iter().map(|w| el(p, w)).collect()).unwrap()
    }

    #[test]
    fn divides_examples() {
        let p = Arc::new(fixtures::prod22());
        let c = el(&p, "a b α");
        let e = Element::identity(&p);
        assert_eq!(divides(&e, &c).unwrap(), Some(c.clone()));
        assert_eq!(divides(&c, &c).unwrap(), Some(e));
        assert_eq!(divides(&el(&p, "a"), &c).unwrap(), Some(el(&p, "b α")));
        assert_eq!(divides(&el(&p, "b"), &c).unwrap(), None);
        assert_eq!(divides(&el(&p, "a a"), &c).unwrap(), None);
    }

    #[test]
    fn slice_sizes() {
        let p = Arc::new(fixtures::prod22());
        let c0 = enumerate_degree(&p, &deg(&[0, 0])).unwrap();
        assert_eq!(c0.elements(), &[Element::identity(&p)]);
        assert_eq!(enumerate_degree(&p, &deg(&[1, 1])).unwrap().len(), 4);
        assert_eq!(enumerate_degree(&p, &deg(&[2, 3])).unwrap().len(), 32);
        let e = Arc::new(
            Presentation::product(
                &fixtures::free_ab(),
                &Presentation::free_monoid::<&str>(&[]).unwrap(),
            )
            .unwrap(),
        );
        assert!(enumerate_degree(&e, &deg(&[0, 1])).unwrap().is_empty());
        assert!(enumerate_degree(&p, &deg(&[1])).is_err());
    }

    #[test]
    fn common_upper_examples() {
        let p = Arc::new(fixtures::prod22());
        let a = el(&p, "a");
        assert_eq!(
            common_upper(&a, &a).unwrap().elements(),
            std::slice::from_ref(&a)
        );
        assert_eq!(
            common_upper(&a, &el(&p, "α")).unwrap().elements(),
            &[el(&p, "a α")]
        );
        assert!(common_upper(&a, &el(&p, "b")).unwrap().is_empty());
    }

    #[test]
    fn comparability() {
        let p = Arc::new(fixtures::prod22());
        assert!(is_comparable(&el(&p, "a"), &el(&p, "a b")).unwrap());
        assert!(!is_comparable(&el(&p, "a"), &el(&p, "b")).unwrap());
        // cross-color atoms in a strict 2-monoid always fill a square
        let r = Arc::new(fixtures::rsv_presentation());
        for &b in r.alphabets()[0].iter() {
            for &c in r.alphabets()[1].iter() {
                let (x, y) = (Element::atom(&r, b), Element::atom(&r, c));
                assert!(is_comparable(&x, &y).unwrap());
                let join = common_upper(&x, &y).unwrap();
                assert_eq!(join.len(), 1);
            }
        }
    }

    #[test]
    fn prefix_codes() {
        let p = free_ab();
        assert!(is_prefix_code(enumerate_degree(&p, &deg(&[3])).unwrap().elements()).unwrap());
        assert!(!is_prefix_code(&[el(&p, "a"), el(&p, "a b")]).unwrap());
        assert!(is_prefix_code(&[]).unwrap());
        assert!(is_prefix_code(&[el(&p, "a b")]).unwrap());
        assert!(matches!(
            Code::new(&p, vec![el(&p, "a"), el(&p, "a b")]),
            Err(Error::NotPrefixCode(..))
        ));
    }

    #[test]
    fn maximal_codes() {
        let p = free_ab();
        assert!(is_maximal_code(&enumerate_degree(&p, &deg(&[2])).unwrap()).unwrap());
        assert!(!is_maximal_code(&code(&p, &["a"])).unwrap());
        assert!(is_maximal_code(&code(&p, &["a", "b a", "b b"])).unwrap());
        assert!(!is_maximal_code(&code(&p, &["a", "b a"])).unwrap());
        assert!(!is_maximal_code(&Code::new(&p, vec![]).unwrap()).unwrap());

        let e = Arc::new(
            Presentation::product(
                &fixtures::free_ab(),
                &Presentation::free_monoid::<&str>(&[]).unwrap(),
            )
            .unwrap(),
        );
        let c = Code::new(&e, vec![Element::identity(&e)]).unwrap();
        assert_eq!(is_maximal_code(&c).unwrap_err(), Error::NotStrict(2));
    }

    #[test]
    fn expansions() {
        let p = free_ab();
        let one = Code::new(&p, vec![Element::identity(&p)]).unwrap();
        let c1 = Color::new(1, 1).unwrap();
        let two = expand_code(&one, &Element::identity(&p), c1).unwrap();
        assert_eq!(two.to_lines(), vec!["a", "b"]);
        let three = expand_code(&two, &el(&p, "a"), c1).unwrap();
        assert_eq!(three.to_lines(), vec!["b", "a a", "a b"]);
        assert!(is_maximal_code(&three).unwrap());
        assert!(matches!(
            expand_code(&three, &el(&p, "a"), c1),
            Err(Error::NotInCode(_))
        ));

        let q = Arc::new(fixtures::prod22());
        let one = Code::new(&q, vec![Element::identity(&q)]).unwrap();
        let c2 = expand_code(&one, &Element::identity(&q), Color::new(2, 2).unwrap()).unwrap();
        assert_eq!(c2.to_lines(), vec!["α", "β"]);
        assert!(is_maximal_code(&c2).unwrap());
    }

    #[test]
    fn alignment_of_free_and_product_monoids() {
        let p = free_ab();
        let r = alignment_probe(&p, &deg(&[3])).unwrap();
        assert_eq!(r.max_join_size, 1);
        assert!(r.singly_aligned());
        let q = Arc::new(fixtures::prod22());
        let r = alignment_probe(&q, &deg(&[2, 2])).unwrap();
        assert_eq!(r.max_join_size, 1);
    }

    #[test]
    fn probe_agrees_with_pairwise_common_upper() {
        for pres in [fixtures::prod22(), fixtures::rsv_presentation()] {
            let p = Arc::new(pres);
            let bound = deg(&[1, 1]);
            let all = enumerate_below(&p, &bound).unwrap();
            let mut max = 0;
            let mut comparable = 0;
            for a in &all {
                for b in &all {
                    let n = common_upper(a, b).unwrap().len();
                    if n > 0 {
                        comparable += 1;
                    }
                    max = max.max(n);
                }
            }
            let r = alignment_probe(&p, &bound).unwrap();
            assert_eq!(r.max_join_size, max);
            assert_eq!(r.comparable_pairs, comparable);
        }
    }

    #[test]
    fn common_upper_is_a_prefix_code() {
        let p = Arc::new(fixtures::rsv_presentation());
        let all = enumerate_below(&p, &deg(&[1, 1])).unwrap();
        for a in all.iter().step_by(7) {
            for b in all.iter().step_by(5) {
                let j = common_upper(a, b).unwrap();
                assert!(is_prefix_code(j.elements()).unwrap());
            }
        }
    }
}
