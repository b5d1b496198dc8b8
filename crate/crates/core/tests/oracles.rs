//! Brute-force oracles computed independently of the library's own shortcuts.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use kmonoid_core::codes::{alignment_probe, common_upper, enumerate_below, enumerate_degree};
use kmonoid_core::fixtures;
use kmonoid_core::{Degree, Element, Presentation};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Every way of shuffling `xs` into `ys` keeping both orders.
fn interleavings(xs: &[&str], ys: &[&str]) -> Vec<Vec<String>> {
    if xs.is_empty() || ys.is_empty() {
        return vec![xs.iter().chain(ys).map(|s| s.to_string()).collect()];
    }
    let mut out = Vec::new();
    for (head, rest) in [(xs[0], (&xs[1..], ys)), (ys[0], (xs, &ys[1..]))] {
        for mut tail in interleavings(rest.0, rest.1) {
            tail.insert(0, head.to_string());
            out.push(tail);
        }
    }
    out
}

#[test]
fn shuffles_of_ab_through_alpha_beta_beta() {
    let p = Arc::new(fixtures::prod22());
    let words = interleavings(&["a", "b"], &["α", "β", "β"]);
    assert_eq!(words.len(), 10);
    let expected = Element::from_color_words(
        &p,
        &[
            vec![p.id("a").unwrap(), p.id("b").unwrap()],
            vec![p.id("α").unwrap(), p.id("β").unwrap(), p.id("β").unwrap()],
        ],
    )
    .unwrap();
    for w in &words {
        let x = Element::from_names(&p, w).unwrap();
        assert_eq!(x, expected, "{w:?}");
        assert_eq!(x.degree(), Degree::new(vec![2, 3]));
        assert_eq!(x.to_color_lines(), vec!["color 1: a b", "color 2: α β β"]);
    }
}

/// Counts, for every element of degree `d` and split `m ≤ d`, the pairs in
/// `C_m × C_{d-m}` whose product it is.
fn factorization_counts(p: &Arc<Presentation>, bound: &Degree) {
    for d in bound.below() {
        let targets = enumerate_degree(p, &d).unwrap();
        for m in d.below() {
            let rest = d.diff(&m).unwrap().unwrap();
            let mut hits: HashMap<Element, usize> = HashMap::new();
            for x in &enumerate_degree(p, &m).unwrap() {
                for y in &enumerate_degree(p, &rest).unwrap() {
                    *hits.entry(x.multiply(y).unwrap()).or_default() += 1;
                }
            }
            assert_eq!(hits.len(), targets.len(), "degree {d}, split {m}");
            for t in &targets {
                assert_eq!(hits.get(t), Some(&1), "{} at split {m}", t.to_inline());
            }
        }
    }
}

#[test]
fn unique_factorization_by_counting() {
    factorization_counts(&Arc::new(fixtures::prod22()), &Degree::new(vec![2, 2]));
    let bound = Degree::new(vec![1, 1, 2]);
    factorization_counts(&Arc::new(fixtures::counterexample3_repaired()), &bound);
    let random = fixtures::random_presentation(3, 2, &mut StdRng::seed_from_u64(5)).unwrap();
    factorization_counts(&Arc::new(random), &bound);
}

/// `aS ∩ bS` cut off at `bound`, by filtering all elements.
fn common_multiples(all: &[Element], a: &Element, b: &Element) -> BTreeSet<Element> {
    let prefixed = |x: &Element, c: &Element| {
        x.degree().leq(&c.degree()).unwrap() && c.prefix(&x.degree()).unwrap() == *x
    };
    all.iter()
        .filter(|c| prefixed(a, c) && prefixed(b, c))
        .cloned()
        .collect()
}

fn upward_closure(all: &[Element], generators: &[Element], bound: &Degree) -> BTreeSet<Element> {
    let mut out = BTreeSet::new();
    for d in generators {
        for t in all {
            if d.degree().add(&t.degree()).unwrap().leq(bound).unwrap() {
                out.insert(d.multiply(t).unwrap());
            }
        }
    }
    out
}

fn multiples_against_joins(p: &Arc<Presentation>, operands: &Degree, bound: &Degree) {
    let all = enumerate_below(p, bound).unwrap();
    let small = enumerate_below(p, operands).unwrap();
    for a in &small {
        for b in &small {
            let join = common_upper(a, b).unwrap();
            assert_eq!(
                common_multiples(&all, a, b),
                upward_closure(&all, join.elements(), bound),
                "{} and {}",
                a.to_inline(),
                b.to_inline()
            );
        }
    }
}

#[test]
fn common_multiples_are_generated_by_the_join_code() {
    multiples_against_joins(
        &Arc::new(fixtures::prod22()),
        &Degree::new(vec![1, 1]),
        &Degree::new(vec![2, 2]),
    );
    multiples_against_joins(
        &Arc::new(fixtures::rsv_presentation()),
        &Degree::new(vec![1, 1]),
        &Degree::new(vec![1, 2]),
    );
    multiples_against_joins(
        &Arc::new(fixtures::counterexample3_repaired()),
        &Degree::new(vec![1, 1, 0]),
        &Degree::new(vec![1, 1, 1]),
    );
}

#[test]
fn products_of_free_monoids_are_singly_aligned() {
    for p in [fixtures::prod22(), fixtures::nk(2).unwrap()] {
        let r = alignment_probe(&Arc::new(p), &Degree::new(vec![2, 2])).unwrap();
        assert_eq!(r.max_join_size, 1);
    }
}

#[test]
fn degree_slices_have_product_size() {
    let p = Arc::new(fixtures::rsv_presentation());
    for m in Degree::new(vec![2, 2]).below() {
        let c = enumerate_degree(&p, &m).unwrap();
        let expected = 6usize.pow(m.components()[0]) * 8usize.pow(m.components()[1]);
        assert_eq!(c.len(), expected);
        let distinct: BTreeSet<&Element> = c.iter().collect();
        assert_eq!(distinct.len(), expected);
    }
}
