//! Presentations of strict k-monoids by colored alphabets and a complete
//! set of squares.
//!
//! For every ordered pair of letters `(u, v)` of distinct colors the square
//! map names the unique pair `(v', u')` with `uv = v'u'`. A presentation
//! defines a k-monoid when the square map is complete, mutually inverse
//! (`(u,v) -> (v',u')` iff `(v',u') -> (u,v)`) and satisfies the cube
//! (associativity) condition for every triple of distinct colors.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::Color;
use crate::report::{Failure, FailureKind, ValidationReport};

/// Index of a letter inside its presentation. Letters are numbered color by
/// color, so the natural order on ids is (color, position in alphabet).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterId(pub(crate) u32);

impl LetterId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub color: Color,
    pub name: String,
}

/// Dense table of squares indexed by ordered letter pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMap {
    n: usize,
    table: Vec<Option<(LetterId, LetterId)>>,
}

impl SquareMap {
    fn new(n: usize) -> Self {
        SquareMap {
            n,
            table: vec![None; n * n],
        }
    }

    fn slot(&self, u: LetterId, v: LetterId) -> usize {
        u.index() * self.n + v.index()
    }

    /// The pair `(v', u')` with `uv = v'u'`.
    #[inline]
    pub fn get(&self, u: LetterId, v: LetterId) -> Option<(LetterId, LetterId)> {
        self.table[self.slot(u, v)]
    }

    fn set(&mut self, u: LetterId, v: LetterId, image: (LetterId, LetterId)) {
        let s = self.slot(u, v);
        self.table[s] = Some(image);
    }

    /// Every stored entry `((u, v), (v', u'))` in id order.
    pub fn entries(
        &self,
    ) -> impl Iterator<Item = ((LetterId, LetterId), (LetterId, LetterId))> + '_ {
        self.table.iter().enumerate().filter_map(move |(i, e)| {
            e.map(|img| {
                (
                    (LetterId((i / self.n) as u32), LetterId((i % self.n) as u32)),
                    img,
                )
            })
        })
    }

    pub fn len(&self) -> usize {
        self.table.iter().filter(|e| e.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone)]
pub struct Presentation {
    alphabets: Vec<Vec<LetterId>>,
    letters: Vec<Letter>,
    by_name: HashMap<String, LetterId>,
    squares: SquareMap,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.squares == other.squares
    }
}

impl Eq for Presentation {}

/// Squares named by letter names: `(u, v, v', u')` meaning `uv = v'u'`.
pub type NamedSquare = (String, String, String, String);

/// Collects alphabets and squares, then resolves them into a
/// [`Presentation`].
///
/// Explicit squares are placed first, then the reverse of every explicit
/// square fills its slot if still empty, then (optionally) every remaining
/// cross-color pair gets the commuting square. The result is independent of
/// the order squares were added in.
#[derive(Debug, Clone, Default)]
pub struct PresentationBuilder {
    alphabets: Vec<Vec<String>>,
    squares: Vec<NamedSquare>,
    commute_rest: bool,
}

impl PresentationBuilder {
    pub fn new(alphabets: Vec<Vec<String>>) -> Self {
        PresentationBuilder {
            alphabets,
            ..Default::default()
        }
    }

    pub fn square(mut self, u: &str, v: &str, v2: &str, u2: &str) -> Self {
        self.squares
            .push((u.to_string(), v.to_string(), v2.to_string(), u2.to_string()));
        self
    }

    pub fn squares(mut self, squares: impl IntoIterator<Item = NamedSquare>) -> Self {
        self.squares.extend(squares);
        self
    }

    pub fn commute_rest(mut self) -> Self {
        self.commute_rest = true;
        self
    }

    pub fn build(self) -> Result<Presentation> {
        let mut letters = Vec::new();
        let mut by_name = HashMap::new();
        let mut alphabets = Vec::with_capacity(self.alphabets.len());
        for (slot, names) in self.alphabets.iter().enumerate() {
            let color = Color::from_slot(slot);
            let mut ids = Vec::with_capacity(names.len());
            for name in names {
                check_name(name)?;
                let id = LetterId(letters.len() as u32);
                if by_name.insert(name.clone(), id).is_some() {
                    return Err(Error::DuplicateLetter(name.clone()));
                }
                letters.push(Letter {
                    color,
                    name: name.clone(),
                });
                ids.push(id);
            }
            alphabets.push(ids);
        }
        let mut p = Presentation {
            alphabets,
            squares: SquareMap::new(letters.len()),
            letters,
            by_name,
        };

        let mut explicit: BTreeMap<(LetterId, LetterId), (LetterId, LetterId)> = BTreeMap::new();
        for (u, v, v2, u2) in &self.squares {
            let (u, v, v2, u2) = (p.id(u)?, p.id(v)?, p.id(v2)?, p.id(u2)?);
            let (cu, cv) = (p.color(u), p.color(v));
            if cu == cv || p.color(v2) != cv || p.color(u2) != cu {
                return Err(Error::BadSquare(p.name(u).into(), p.name(v).into()));
            }
            if let Some(prev) = explicit.insert((u, v), (v2, u2)) {
                if prev != (v2, u2) {
                    return Err(Error::ConflictingSquare(p.name(u).into(), p.name(v).into()));
                }
            }
        }
        for (&(u, v), &img) in &explicit {
            p.squares.set(u, v, img);
        }
        for (&(u, v), &(v2, u2)) in &explicit {
            if p.squares.get(v2, u2).is_none() {
                p.squares.set(v2, u2, (u, v));
            }
        }
        if self.commute_rest {
            for (u, v) in p.cross_pairs() {
                if p.squares.get(u, v).is_none() {
                    p.squares.set(u, v, (v, u));
                }
            }
        }
        Ok(p)
    }
}

fn check_name(name: &str) -> Result<()> {
    let reserved = ["->", "--", "|", "ε", "*", "/"];
    if name.is_empty() || name.chars().any(char::is_whitespace) || reserved.contains(&name) {
        return Err(Error::Syntax {
            line: 0,
            message: format!("`{name}` is not a valid letter name"),
        });
    }
    Ok(())
}

impl Presentation {
    pub fn builder(alphabets: Vec<Vec<String>>) -> PresentationBuilder {
        PresentationBuilder::new(alphabets)
    }

    /// The free monoid on the given letters, as a 1-monoid.
    pub fn free_monoid<S: AsRef<str>>(alphabet: &[S]) -> Result<Presentation> {
        PresentationBuilder::new(vec![alphabet
            .iter()
            .map(|s| s.as_ref().to_string())
            .collect()])
        .build()
    }

    /// Direct product `P × Q`: colors of `P` followed by colors of `Q`,
    /// squares within each factor copied, all cross-factor squares commuting.
    pub fn product(p: &Presentation, q: &Presentation) -> Result<Presentation> {
        let alphabets = p
            .alphabet_names()
            .into_iter()
            .chain(q.alphabet_names())
            .collect();
        PresentationBuilder::new(alphabets)
            .squares(p.named_squares())
            .squares(q.named_squares())
            .commute_rest()
            .build()
    }

    pub fn k(&self) -> usize {
        self.alphabets.len()
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    pub fn alphabet(&self, color: Color) -> &[LetterId] {
        &self.alphabets[color.slot()]
    }

    pub fn alphabets(&self) -> &[Vec<LetterId>] {
        &self.alphabets
    }

    pub fn alphabet_names(&self) -> Vec<Vec<String>> {
        self.alphabets
            .iter()
            .map(|ids| ids.iter().map(|&id| self.name(id).to_string()).collect())
            .collect()
    }

    pub fn letter(&self, id: LetterId) -> &Letter {
        &self.letters[id.index()]
    }

    #[inline]
    pub fn color(&self, id: LetterId) -> Color {
        self.letters[id.index()].color
    }

    pub fn name(&self, id: LetterId) -> &str {
        &self.letters[id.index()].name
    }

    pub fn lookup(&self, name: &str) -> Option<LetterId> {
        self.by_name.get(name).copied()
    }

    pub fn id(&self, name: &str) -> Result<LetterId> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    pub fn squares(&self) -> &SquareMap {
        &self.squares
    }

    /// Square lookup by letter ids.
    #[inline]
    pub fn square(&self, u: LetterId, v: LetterId) -> Option<(LetterId, LetterId)> {
        self.squares.get(u, v)
    }

    /// Every ordered pair of letters with distinct colors, in id order.
    pub fn cross_pairs(&self) -> Vec<(LetterId, LetterId)> {
        let ids: Vec<LetterId> = (0..self.letters.len() as u32).map(LetterId).collect();
        let mut out = Vec::new();
        for &u in &ids {
            for &v in &ids {
                if self.color(u) != self.color(v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All squares as names, in id order.
    pub fn named_squares(&self) -> Vec<NamedSquare> {
        self.squares
            .entries()
            .map(|((u, v), (v2, u2))| {
                (
                    self.name(u).to_string(),
                    self.name(v).to_string(),
                    self.name(v2).to_string(),
                    self.name(u2).to_string(),
                )
            })
            .collect()
    }

    /// Checks completeness and the mutual-inverse law of the square map.
    pub fn validate_squares(&self) -> ValidationReport {
        let mut failures = Vec::new();
        for (u, v) in self.cross_pairs() {
            match self.square(u, v) {
                None => failures.push(Failure {
                    kind: FailureKind::MissingSquare {
                        u: self.name(u).into(),
                        v: self.name(v).into(),
                    },
                }),
                Some((v2, u2)) => {
                    let back = self.square(v2, u2);
                    if back != Some((u, v)) {
                        let back = match back {
                            Some((x, y)) => (self.name(x).into(), self.name(y).into()),
                            None => ("?".into(), "?".into()),
                        };
                        failures.push(Failure {
                            kind: FailureKind::NotInverse {
                                u: self.name(u).into(),
                                v: self.name(v).into(),
                                image: (self.name(v2).into(), self.name(u2).into()),
                                back,
                            },
                        });
                    }
                }
            }
        }
        ValidationReport::new(failures)
    }

    /// Checks the cube condition on every triple of colors `i < j < l` and
    /// every `(f, g, h) ∈ X_i × X_j × X_l`.
    ///
    /// Route A: `fg = g¹f¹`, `f¹h = h¹f²`, `g¹h¹ = h²g²`.
    /// Route B: `gh = h₁g₁`, `fh₁ = h₂f₁`, `f₁g₁ = g₂f₂`.
    /// Both must end in the same `(h, g, f)` letters. Cubes touching a
    /// missing square are skipped; [`Self::validate_squares`] reports those.
    pub fn validate_associativity(&self) -> ValidationReport {
        let k = self.k();
        let mut failures = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    for &f in &self.alphabets[i] {
                        for &g in &self.alphabets[j] {
                            for &h in &self.alphabets[l] {
                                if let Some(fail) = self.check_cube(f, g, h) {
                                    failures.push(fail);
                                }
                            }
                        }
                    }
                }
            }
        }
        ValidationReport::new(failures)
    }

    /// Both routes around one cube, as `(h, g, f)` end letters.
    #[allow(clippy::type_complexity)]
    pub fn cube_routes(
        &self,
        f: LetterId,
        g: LetterId,
        h: LetterId,
    ) -> Option<(
        (LetterId, LetterId, LetterId),
        (LetterId, LetterId, LetterId),
    )> {
        let (g1, f1) = self.square(f, g)?;
        let (h1, f2) = self.square(f1, h)?;
        let (h2, g2) = self.square(g1, h1)?;
        let (h1b, g1b) = self.square(g, h)?;
        let (h2b, f1b) = self.square(f, h1b)?;
        let (g2b, f2b) = self.square(f1b, g1b)?;
        Some(((h2, g2, f2), (h2b, g2b, f2b)))
    }

    fn check_cube(&self, f: LetterId, g: LetterId, h: LetterId) -> Option<Failure> {
        let (a, b) = self.cube_routes(f, g, h)?;
        if a == b {
            return None;
        }
        let names = |t: (LetterId, LetterId, LetterId)| {
            (
                self.name(t.0).to_string(),
                self.name(t.1).to_string(),
                self.name(t.2).to_string(),
            )
        };
        Some(Failure {
            kind: FailureKind::Cube {
                triple: names((f, g, h)),
                route_a: names(a),
                route_b: names(b),
            },
        })
    }

    /// Squares, then cubes.
    pub fn validate(&self) -> ValidationReport {
        self.validate_squares().merge(self.validate_associativity())
    }

    /// True iff every alphabet is non-empty, i.e. the degree map is onto.
    pub fn is_strict(&self) -> bool {
        self.alphabets.iter().all(|a| !a.is_empty())
    }

    /// First empty color, if any.
    pub fn empty_color(&self) -> Option<Color> {
        self.alphabets
            .iter()
            .position(Vec::is_empty)
            .map(Color::from_slot)
    }

    /// 0-based slots of empty colors.
    pub fn empty_slots(&self) -> Vec<usize> {
        self.alphabets
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_empty())
            .map(|(i, _)| i)
            .collect()
    }

    /// Removes every empty color and renumbers the rest.
    pub fn strictify(&self) -> Presentation {
        if self.is_strict() {
            return self.clone();
        }
        let alphabets = self
            .alphabet_names()
            .into_iter()
            .filter(|a| !a.is_empty())
            .collect();
        PresentationBuilder::new(alphabets)
            .squares(self.named_squares())
            .build()
            .expect("letters and squares of a valid presentation stay valid")
    }

    /// True iff every square has the commuting form `uv = vu`.
    pub fn is_commutative_cross(&self) -> bool {
        self.squares
            .entries()
            .all(|((u, v), (v2, u2))| v2 == v && u2 == u)
    }

    /// Number of cross-color ordered pairs without a square.
    pub fn missing_squares(&self) -> usize {
        self.cross_pairs()
            .into_iter()
            .filter(|&(u, v)| self.square(u, v).is_none())
            .count()
    }

    /// Parses the text format described in [`crate::format`].
    pub fn parse(text: &str) -> Result<Presentation> {
        crate::format::parse_presentation(text)
    }

    /// Canonical text rendering; `parse(render(p)) == p` for complete maps.
    pub fn render(&self) -> String {
        crate::format::render_presentation(self)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
