//! Windowed checks of the structure of `S ⋈ G`.
//!
//! The group is infinite in general, so group elements are drawn from the
//! ball of reduced words of length `≤ window`. A search that would need a
//! group element outside the ball is counted as inconclusive, not failed.

use std::fmt;

use super::{GeneralizedElement, GroupWord, SelfSimilarAction};
use crate::codes::{enumerate_below, enumerate_degree};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::lattice::Degree;
use crate::report::LawReport;

/// Outcome of [`wfp_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WfpReport {
    pub bound: Degree,
    pub window: usize,
    /// Elements `(u, g)` searched.
    pub targets: usize,
    /// `(element, split)` pairs with a factorization found and verified.
    pub splits: usize,
    /// Alternative factorizations through a unit, verified equal up to it.
    pub alternatives: usize,
    /// Alternatives whose right group part left the window.
    pub inconclusive: usize,
    pub failures: Vec<String>,
}

impl WfpReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for WfpReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bound: {}  window: {}", self.bound, self.window)?;
        writeln!(f, "elements: {}", self.targets)?;
        writeln!(f, "splits: {}", self.splits)?;
        writeln!(f, "alternatives: {}", self.alternatives)?;
        writeln!(f, "inconclusive: {}", self.inconclusive)?;
        if self.passed() {
            return writeln!(f, "pass");
        }
        writeln!(f, "fail")?;
        for m in &self.failures {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

fn single_symbols(a: &SelfSimilarAction) -> Vec<GroupWord> {
    a.symbols().into_iter().map(GroupWord::symbol).collect()
}

/// Elements of total degree 1 or 2.
fn small_elements(a: &SelfSimilarAction) -> Result<Vec<Element>> {
    let p = a.base();
    let k = p.k();
    let mut out = Vec::new();
    for m in Degree::new(vec![2; k]).below() {
        if (1..=2).contains(&m.total()) {
            out.extend(enumerate_degree(p, &m)?.elements().iter().cloned());
        }
    }
    Ok(out)
}

/// The four coherence identities of a self-similar action, for `g, h` single
/// symbols and `u, v` of total degree 1 or 2:
///
/// 1. `g·(uv) = (g·u)(g|_u·v)`
/// 2. `(gh)·u = g·(h·u)`
/// 3. `g|_{uv} = (g|_u)|_v`
/// 4. `(gh)|_u = g|_{h·u}·h|_u`
///
/// Left sides act on the normal form of the product, right sides compose the
/// pieces.
pub fn zappa_szep_identities(a: &SelfSimilarAction) -> Result<LawReport> {
    let mut report = LawReport::default();
    let symbols = single_symbols(a);
    let small = small_elements(a)?;
    for g in &symbols {
        for u in &small {
            let (gu, gu_r) = a.act_word(g, u)?;
            for v in &small {
                let (lhs, lhs_r) = a.act_word(g, &u.multiply(v)?)?;
                let (gv, r) = a.act_word(&gu_r, v)?;
                let rhs = gu.multiply(&gv)?;
                report.record(lhs == rhs, || {
                    format!(
                        "g·(uv) ≠ (g·u)(g|_u·v) for g = {}, u = {}, v = {}",
                        a.render_word(g),
                        u.to_inline(),
                        v.to_inline()
                    )
                });
                report.record(lhs_r == r, || {
                    format!(
                        "g|_(uv) ≠ (g|_u)|_v for g = {}, u = {}, v = {}",
                        a.render_word(g),
                        u.to_inline(),
                        v.to_inline()
                    )
                });
            }
        }
    }
    for g in &symbols {
        for h in &symbols {
            let gh = g.concat(h);
            for u in &small {
                let (lhs, lhs_r) = a.act_word(&gh, u)?;
                let (hu, hu_r) = a.act_word(h, u)?;
                let (ghu, g_r) = a.act_word(g, &hu)?;
                report.record(lhs == ghu, || {
                    format!(
                        "(gh)·u ≠ g·(h·u) for g = {}, h = {}, u = {}",
                        a.render_word(g),
                        a.render_word(h),
                        u.to_inline()
                    )
                });
                report.record(lhs_r == g_r.concat(&hu_r), || {
                    format!(
                        "(gh)|_u ≠ g|_(h·u)·h|_u for g = {}, h = {}, u = {}",
                        a.render_word(g),
                        a.render_word(h),
                        u.to_inline()
                    )
                });
            }
        }
    }
    Ok(report)
}

/// Weak factorization property, windowed.
///
/// For every `x = (u, g)` with `δ(u) ≤ bound`, `g` in the window, and every
/// split `δ(u) = m + n`, checks that `x = x₁x₂` with `λ(x₁) = m` and that
/// every other such factorization through a window unit `h` is
/// `(x₁h)(h⁻¹x₂)`. The alternatives are `x₁' = (u₁, h)` and
/// `x₂' = (h⁻¹·s, (h|_{h⁻¹·s})⁻¹ g)` where `u = u₁s` is the unique monoid
/// factorization.
pub fn wfp_check(a: &SelfSimilarAction, bound: &Degree, window: usize) -> Result<WfpReport> {
    let p = a.base();
    if bound.k() != p.k() {
        return Err(Error::Dimension {
            expected: p.k(),
            found: bound.k(),
        });
    }
    let ball = GroupWord::ball(a.generator_count(), window);
    let mut report = WfpReport {
        bound: bound.clone(),
        window,
        targets: 0,
        splits: 0,
        alternatives: 0,
        inconclusive: 0,
        failures: Vec::new(),
    };
    let fail = |report: &mut WfpReport, m: String| {
        if report.failures.len() < 64 {
            report.failures.push(m);
        }
    };
    for u in enumerate_below(p, bound)? {
        report.targets += ball.len();
        let x = a.from_monoid(u.clone());
        for m in u.degree().below() {
            let (u1, s) = u.factor(&m)?;
            let x1 = a.from_monoid(u1.clone());
            let x2 = a.from_monoid(s.clone());
            let prod = a.zs_multiply(&x1, &x2)?;
            if prod != x || x1.size() != m {
                fail(
                    &mut report,
                    format!("no factorization of {} at {m}", u.to_inline()),
                );
                continue;
            }
            report.splits += ball.len();
            for h in &ball {
                let hinv = h.inverse();
                let (s2, _) = a.act_word(&hinv, &s)?;
                let (back, r) = a.act_word(h, &s2)?;
                let alt1 = GeneralizedElement::new(u1.clone(), h.clone());
                let alt2 = GeneralizedElement::new(s2, r.inverse());
                let via_unit1 = a.zs_multiply(&x1, &a.unit(h.clone()))?;
                let via_unit2 = a.zs_multiply(&a.unit(hinv), &x2)?;
                let ok = back == s
                    && a.zs_multiply(&alt1, &alt2)? == x
                    && via_unit1 == alt1
                    && via_unit2 == alt2;
                if !ok {
                    fail(
                        &mut report,
                        format!(
                            "alternative factorization of {} at {m} through {} disagrees",
                            u.to_inline(),
                            a.render_word(h)
                        ),
                    );
                }
                for g in &ball {
                    if r.inverse().product_len(g) > window {
                        report.inconclusive += 1;
                    } else {
                        report.alternatives += 1;
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Units are exactly the size-0 elements, each inverted within the window,
/// and every `(x, g)` with `x` a letter is an atom: not a unit, and any split
/// of it has a unit factor.
pub fn units_and_atoms(a: &SelfSimilarAction, window: usize) -> Result<LawReport> {
    let p = a.base();
    let mut report = LawReport::default();
    let ball = GroupWord::ball(a.generator_count(), window);
    let one = a.unit(GroupWord::identity());
    for g in &ball {
        let u = a.unit(g.clone());
        let v = a.unit(g.inverse());
        let ok = a.zs_multiply(&u, &v)? == one && a.zs_multiply(&v, &u)? == one;
        report.record(ok && u.is_unit(), || {
            format!(
                "(ε, {}) is not inverted by (ε, {})",
                a.render_word(g),
                a.render_word(&g.inverse())
            )
        });
    }
    for x in 0..p.letter_count() {
        let atom = Element::atom(p, crate::presentation::LetterId(x as u32));
        for g in &ball {
            let e = GeneralizedElement::new(atom.clone(), g.clone());
            // splits have sizes 0 + 1 or 1 + 0; the size-0 side is a unit
            let sizes_ok = e.size().total() == 1 && !e.is_unit();
            let (gx, r) = a.act_word(g, &atom)?;
            let left = a.zs_multiply(&a.unit(g.clone()), &a.from_monoid(atom.clone()))?;
            report.record(sizes_ok && left == GeneralizedElement::new(gx, r), || {
                format!(
                    "({}, {}) is not an atom",
                    atom.to_inline(),
                    a.render_word(g)
                )
            });
        }
    }
    Ok(report)
}

/// Unique factorization over a transversal of the atoms.
///
/// The atoms `(x, ε)`, one per letter, represent the ℛ-classes of atoms:
/// `(x, g) = (x, ε)(ε, g)`. The check confirms that, inside the window, the
/// atoms fall into exactly one class per letter, and that every `(u, g)`
/// with `|u| ≤ max_len` is `t₁⋯tₙ·(ε, h)` for exactly one normal-form word of
/// transversal atoms `t₁⋯tₙ` and one `h`.
pub fn transversal_check(a: &SelfSimilarAction, max_len: u32, window: usize) -> Result<LawReport> {
    let p = a.base();
    let mut report = LawReport::default();
    let ball = GroupWord::ball(a.generator_count(), window);

    for x in 0..p.letter_count() {
        let atom = Element::atom(p, crate::presentation::LetterId(x as u32));
        let t = a.from_monoid(atom.clone());
        for g in &ball {
            let e = GeneralizedElement::new(atom.clone(), g.clone());
            let found = ball
                .iter()
                .filter(|h| a.zs_multiply(&t, &a.unit((*h).clone())).ok() == Some(e.clone()))
                .count();
            report.record(found == 1, || {
                format!(
                    "({}, {}) lies in {found} classes of transversal atoms",
                    atom.to_inline(),
                    a.render_word(g)
                )
            });
        }
    }

    let k = p.k();
    let degrees: Vec<Degree> = Degree::new(vec![max_len; k])
        .below()
        .into_iter()
        .filter(|d| d.total() <= max_len)
        .collect();
    for d in &degrees {
        let words = enumerate_degree(p, d)?;
        for u in words.iter() {
            for g in &ball {
                let target = GeneralizedElement::new(u.clone(), g.clone());
                let mut found = 0;
                for w in words.iter() {
                    let mut acc = a.unit(GroupWord::identity());
                    for &l in w.letters() {
                        acc = a.zs_multiply(&acc, &a.from_monoid(Element::atom(p, l)))?;
                    }
                    for h in &ball {
                        if a.zs_multiply(&acc, &a.unit(h.clone()))? == target {
                            found += 1;
                        }
                    }
                }
                report.record(found == 1, || {
                    format!(
                        "({}, {}) has {found} transversal factorizations",
                        u.to_inline(),
                        a.render_word(g)
                    )
                });
            }
        }
    }
    Ok(report)
}
