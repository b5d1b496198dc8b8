//! Named example presentations and actions.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::presentation::{NamedSquare, Presentation, PresentationBuilder};
use crate::selfsim::{relators_to_squares, GroupWord, InverseNumbering, SelfSimilarAction};

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn sq(u: &str, v: &str, v2: &str, u2: &str) -> NamedSquare {
    (u.into(), v.into(), v2.into(), u2.into())
}

/// The free monoid on `{a, b}`.
pub fn free_ab() -> Presentation {
    Presentation::free_monoid(&["a", "b"]).expect("static fixture")
}

/// `{a, b}* × {α, β}*`.
pub fn prod22() -> Presentation {
    PresentationBuilder::new(vec![names(&["a", "b"]), names(&["α", "β"])])
        .commute_rest()
        .build()
        .expect("static fixture")
}

const SPECIAL: [(&str, &str, &str, &str); 6] = [
    ("a", "b", "b1", "a1"),
    ("b", "c", "c2", "b2"),
    ("a1", "c", "c1", "a2"),
    ("a", "c2", "c3", "a3"),
    ("a3", "b2", "b3", "a2"),
    ("b1", "c1", "c3", "b4"),
];

fn three_colors(special: &[(&str, &str, &str, &str)]) -> Presentation {
    // each u v = v' u' comes with its dual u' v' = v u
    let squares = special
        .iter()
        .flat_map(|&(u, v, v2, u2)| [sq(u, v, v2, u2), sq(u2, v2, v, u)]);
    PresentationBuilder::new(vec![
        names(&["a", "a1", "a2", "a3"]),
        names(&["b", "b1", "b2", "b3", "b4"]),
        names(&["c", "c1", "c2", "c3"]),
    ])
    .squares(squares)
    .commute_rest()
    .build()
    .expect("static fixture")
}

/// Thirteen letters in three colors with six non-commuting squares. The
/// square map is complete and involutive but the cube at `(a, b, c)` fails.
pub fn counterexample3() -> Presentation {
    three_colors(&SPECIAL)
}

/// A valid 3-monoid on the letters of [`counterexample3`] with a
/// non-commuting square for each pair of colors: `a3 b2 = b3 a2` and
/// `b1 c1 = c3 b4` are kept, the others are replaced by `a1 c = c a`.
pub fn counterexample3_repaired() -> Presentation {
    three_colors(&[("a1", "c", "c", "a"), SPECIAL[4], SPECIAL[5]])
}

/// Product of `k` free monoids on two letters: `{a,b}`, `{c,d}`, ….
pub fn nk(k: usize) -> Result<Presentation> {
    if k == 0 {
        return Err(Error::Fixture("nk needs k ≥ 1".into()));
    }
    let alphabets = (0..k)
        .map(|i| {
            if k <= 13 {
                let x = (b'a' + 2 * i as u8) as char;
                let y = (b'a' + 2 * i as u8 + 1) as char;
                vec![x.to_string(), y.to_string()]
            } else {
                vec![format!("x{}", i + 1), format!("y{}", i + 1)]
            }
        })
        .collect();
    PresentationBuilder::new(alphabets).commute_rest().build()
}

/// A random valid k-monoid with `letters` letters per color, drawn by
/// rejection sampling over random square maps. Cross-color squares are not
/// all commuting unless `k < 2`.
pub fn random_presentation<R: Rng>(k: usize, letters: usize, rng: &mut R) -> Result<Presentation> {
    let family = |i: usize| ((b'p' + i as u8) as char).to_string();
    let alphabets: Vec<Vec<String>> = (0..k)
        .map(|i| (1..=letters).map(|j| format!("{}{j}", family(i))).collect())
        .collect();
    for _ in 0..200_000 {
        let mut squares = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let mut targets: Vec<(usize, usize)> = (0..letters)
                    .flat_map(|y| (0..letters).map(move |x| (y, x)))
                    .collect();
                targets.shuffle(rng);
                let mut t = targets.into_iter();
                for x in 0..letters {
                    for y in 0..letters {
                        let (y2, x2) = t.next().expect("sizes match");
                        squares.push((
                            alphabets[i][x].clone(),
                            alphabets[j][y].clone(),
                            alphabets[j][y2].clone(),
                            alphabets[i][x2].clone(),
                        ));
                    }
                }
            }
        }
        let p = PresentationBuilder::new(alphabets.clone())
            .squares(squares)
            .build()?;
        if p.validate().passed() && (k < 2 || !p.is_commutative_cross()) {
            return Ok(p);
        }
    }
    Err(Error::Fixture("no valid presentation found".into()))
}

/// The adding machine: `g` acts on `{0, 1}*` as binary increment with the
/// least significant digit first.
pub fn adding_machine() -> SelfSimilarAction {
    let base = Arc::new(Presentation::free_monoid(&["0", "1"]).expect("static fixture"));
    let mut a =
        SelfSimilarAction::new(&base, vec![("g".into(), "g^-1".into())]).expect("static fixture");
    let g = a.symbol("g").expect("declared");
    let (zero, one) = (
        base.id("0").expect("declared"),
        base.id("1").expect("declared"),
    );
    a.set(g, zero, one, GroupWord::identity())
        .expect("fresh entry");
    a.set(g, one, zero, GroupWord::symbol(g))
        .expect("fresh entry");
    a.derive_inverses();
    a
}

const RSV_AB: [&str; 6] = [
    "a1b1a4b2", "a1b2a4b4", "a1b3a2b1", "a1b4a2b3", "a1b5a1b6", "a2b2a2b6",
];
const RSV_AC: [&str; 8] = [
    "a1c1a2c8", "a1c2a4c4", "a1c3a2c2", "a1c4a3c3", "a1c5a1c6", "a1c7a4c1", "a2c1a4c6", "a2c4a2c7",
];
const RSV_BC: [&str; 12] = [
    "b1c1b5c4", "b1c2b1c5", "b1c3b6c1", "b1c4b3c6", "b1c6b2c3", "b1c7b1c8", "b2c1b3c2", "b2c2b5c5",
    "b2c4b5c3", "b2c7b6c4", "b3c1b6c6", "b3c4b6c3",
];

/// The twelve relators between the `b` and `c` families.
pub fn rsv_bc_relators() -> &'static [&'static str] {
    &RSV_BC
}

/// Relators pairing the `a` family with `b`, then with `c`.
pub fn rsv_a_relators() -> (&'static [&'static str], &'static [&'static str]) {
    (&RSV_AB, &RSV_AC)
}

/// The 2-monoid on `{b1…b6}` and `{c1…c8}` whose squares come from the
/// twelve `b`/`c` relators.
pub fn rsv_presentation() -> Presentation {
    let n = InverseNumbering::abc();
    let squares = relators_to_squares(&RSV_BC, &n).expect("static relators");
    PresentationBuilder::new(vec![n.letters("b"), n.letters("c")])
        .squares(squares)
        .build()
        .expect("static relators")
}

/// The free group on `a1, a2` (inverses `a3, a4`) acting on
/// [`rsv_presentation`] through the `a`/`b` and `a`/`c` relators.
///
/// Fails if the relator reading does not give `a1·c1 = c4`.
pub fn rsv_action() -> Result<SelfSimilarAction> {
    let base = Arc::new(rsv_presentation());
    let n = InverseNumbering::abc();
    let mut a = SelfSimilarAction::new(
        &base,
        vec![("a1".into(), "a3".into()), ("a2".into(), "a4".into())],
    )?;
    for relators in [&RSV_AB[..], &RSV_AC[..]] {
        for (u, v, v2, u2) in relators_to_squares(relators, &n)? {
            let s = a.symbol(&u)?;
            let r = GroupWord::symbol(a.symbol(&u2)?);
            a.set(s, base.id(&v)?, base.id(&v2)?, r)?;
        }
    }
    a.derive_inverses();
    let (image, _) = a.act_letter(&a.parse_word("a1")?, base.id("c1")?)?;
    if base.name(image) != "c4" {
        return Err(Error::Fixture(format!(
            "relator reading gives a1·c1 = {}, expected c4",
            base.name(image)
        )));
    }
    Ok(a)
}

/// A value of the RSV action next to the value it should have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpotValue {
    pub label: String,
    pub expected: String,
    pub computed: String,
}

impl SpotValue {
    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

/// `a1·c1 = c4` and `a1⁻¹·b1⁻¹ = b2⁻¹`, the latter read in the numbering
/// `a1⁻¹ = a3`, `b1⁻¹ = b4`, `b2⁻¹ = b5`.
pub fn rsv_spot_values(a: &SelfSimilarAction) -> Result<Vec<SpotValue>> {
    let p = a.base();
    let image = |g: &str, x: &str| -> Result<String> {
        let (y, _) = a.act_letter(&a.parse_word(g)?, p.id(x)?)?;
        Ok(p.name(y).to_string())
    };
    Ok(vec![
        SpotValue {
            label: "a1·c1".into(),
            expected: "c4".into(),
            computed: image("a1", "c1")?,
        },
        SpotValue {
            label: "a1⁻¹·b1⁻¹".into(),
            expected: "b5".into(),
            computed: image("a3", "b4")?,
        },
    ])
}

/// Names accepted by [`emit`].
pub const FIXTURE_NAMES: [&str; 6] = [
    "prod22",
    "counterexample3",
    "counterexample3-repaired",
    "adding-machine",
    "rsv",
    "nk(K)",
];

/// The files of a named fixture as `(file name, contents)`.
pub fn emit(name: &str) -> Result<Vec<(String, String)>> {
    let one = |file: &str, p: Presentation| Ok(vec![(file.to_string(), p.render())]);
    match name {
        "prod22" => one("prod22.km", prod22()),
        "counterexample3" => one("counterexample3.km", counterexample3()),
        "counterexample3-repaired" => {
            one("counterexample3-repaired.km", counterexample3_repaired())
        }
        "adding-machine" => {
            let a = adding_machine();
            Ok(vec![
                ("adding-machine.km".into(), a.base().render()),
                ("adding-machine.act".into(), a.render("adding-machine.km")),
            ])
        }
        "rsv" => {
            let a = rsv_action()?;
            Ok(vec![
                ("rsv.km".into(), a.base().render()),
                ("rsv.act".into(), a.render("rsv.km")),
            ])
        }
        _ => {
            let k = name
                .strip_prefix("nk(")
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| name.strip_prefix("nk"))
                .and_then(|k| k.parse::<usize>().ok())
                .ok_or_else(|| Error::Fixture(format!("unknown fixture `{name}`")))?;
            one(&format!("n{k}.km"), nk(k)?)
        }
    }
}
