use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::{GroupWord, Symbol};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::format::content_lines;
use crate::presentation::{LetterId, Presentation};
use crate::report::{Failure, FailureKind, ValidationReport};

/// A group acting self-similarly on a base k-monoid.
///
/// Action file:
///
/// ```text
/// base: adding-machine.km
/// generator: g g^-1
/// act: g 0 -> 1 |
/// act: g 1 -> 0 | g
/// ```
///
/// `act: s x -> y | r…` sets `s·x = y` and `s|_x = r…`. Entries missing for
/// an inverse symbol are derived from the forward ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfSimilarAction {
    base: Arc<Presentation>,
    generators: Vec<(String, String)>,
    table: Vec<Option<(LetterId, GroupWord)>>,
}

/// An element `(u, g)` of the Zappa–Szép product `S ⋈ G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralizedElement {
    pub monoid: Element,
    pub group: GroupWord,
}

impl GeneralizedElement {
    pub fn new(monoid: Element, group: GroupWord) -> Self {
        GeneralizedElement { monoid, group }
    }

    /// The size map `λ(u, g) = δ(u)`.
    pub fn size(&self) -> crate::lattice::Degree {
        self.monoid.degree()
    }

    pub fn is_unit(&self) -> bool {
        self.monoid.is_identity()
    }
}

/// The `base:` reference of an action file.
pub fn base_reference(text: &str) -> Result<String> {
    for (n, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("base:") {
            let rest = rest.trim();
            if rest.is_empty() {
                return Err(Error::Syntax {
                    line: n,
                    message: "empty base reference".into(),
                });
            }
            return Ok(rest.to_string());
        }
    }
    Err(Error::Syntax {
        line: 0,
        message: "missing `base:` line".into(),
    })
}

impl SelfSimilarAction {
    /// An action with no entries yet. `generators` lists `(name, inverse name)`.
    pub fn new(base: &Arc<Presentation>, generators: Vec<(String, String)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (g, h) in &generators {
            for name in [g, h] {
                if name.is_empty() || name == "ε" || name == "|" || !seen.insert(name.clone()) {
                    return Err(Error::Action(format!(
                        "bad or duplicate generator name `{name}`"
                    )));
                }
            }
        }
        let n = base.letter_count();
        Ok(SelfSimilarAction {
            base: Arc::clone(base),
            table: vec![None; 2 * generators.len() * n],
            generators,
        })
    }

    pub fn base(&self) -> &Arc<Presentation> {
        &self.base
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[(String, String)] {
        &self.generators
    }

    /// Every generator and inverse symbol.
    pub fn symbols(&self) -> Vec<Symbol> {
        (0..self.generators.len() as u16)
            .flat_map(|g| [Symbol::new(g, false), Symbol::new(g, true)])
            .collect()
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        for (i, (g, h)) in self.generators.iter().enumerate() {
            if g == name {
                return Ok(Symbol::new(i as u16, false));
            }
            if h == name {
                return Ok(Symbol::new(i as u16, true));
            }
        }
        Err(Error::UnknownGenerator(name.to_string()))
    }

    pub fn symbol_name(&self, s: Symbol) -> &str {
        let (g, h) = &self.generators[s.generator as usize];
        if s.inverse {
            h
        } else {
            g
        }
    }

    /// Parses space separated symbol names; `ε` or nothing is the identity.
    pub fn parse_word(&self, text: &str) -> Result<GroupWord> {
        let symbols = text
            .split_whitespace()
            .filter(|t| *t != "ε")
            .map(|t| self.symbol(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupWord::from_symbols(symbols))
    }

    pub fn render_word(&self, w: &GroupWord) -> String {
        if w.is_identity() {
            return "ε".into();
        }
        w.symbols()
            .iter()
            .map(|&s| self.symbol_name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses `u… | g…`, either side possibly empty or `ε`.
    pub fn parse_element(&self, text: &str) -> Result<GeneralizedElement> {
        let (u, g) = text.split_once('|').unwrap_or((text, ""));
        let names = crate::format::word_tokens(u);
        let monoid = Element::from_names(&self.base, &names)?;
        Ok(GeneralizedElement::new(monoid, self.parse_word(g)?))
    }

    pub fn render_element(&self, x: &GeneralizedElement) -> String {
        format!("{} | {}", x.monoid.to_inline(), self.render_word(&x.group))
    }

    fn slot(&self, s: Symbol, x: LetterId) -> usize {
        s.index() * self.base.letter_count() + x.index()
    }

    /// Sets `s·x = y` and `s|_x = r`.
    pub fn set(&mut self, s: Symbol, x: LetterId, y: LetterId, r: GroupWord) -> Result<()> {
        if self.base.color(x) != self.base.color(y) {
            return Err(Error::Action(format!(
                "{}·{} = {} changes color",
                self.symbol_name(s),
                self.base.name(x),
                self.base.name(y)
            )));
        }
        let slot = self.slot(s, x);
        match &self.table[slot] {
            Some(prev) if *prev != (y, r.clone()) => Err(Error::Action(format!(
                "conflicting entries for {}·{}",
                self.symbol_name(s),
                self.base.name(x)
            ))),
            _ => {
                self.table[slot] = Some((y, r));
                Ok(())
            }
        }
    }

    pub fn entry(&self, s: Symbol, x: LetterId) -> Option<(LetterId, &GroupWord)> {
        self.table[self.slot(s, x)].as_ref().map(|(y, r)| (*y, r))
    }

    /// Fills each empty `s⁻¹·y` from `s·x = y`, `s|_x = r` as
    /// `s⁻¹·y = x`, `s⁻¹|_y = r⁻¹`.
    pub fn derive_inverses(&mut self) {
        for s in self.symbols() {
            for x in 0..self.base.letter_count() {
                let x = LetterId(x as u32);
                if let Some((y, r)) = self.table[self.slot(s, x)].clone() {
                    let slot = self.slot(s.inverse(), y);
                    if self.table[slot].is_none() {
                        self.table[slot] = Some((x, r.inverse()));
                    }
                }
            }
        }
    }

    /// `g·x` and `g|_x` for a single letter, with `g` applied symbol by symbol
    /// from the right.
    pub fn act_letter(&self, g: &GroupWord, x: LetterId) -> Result<(LetterId, GroupWord)> {
        let mut cur = x;
        let mut restrictions = Vec::with_capacity(g.len());
        for &s in g.symbols().iter().rev() {
            let (y, r) = self.entry(s, cur).ok_or_else(|| {
                Error::Action(format!(
                    "no entry for {}·{}",
                    self.symbol_name(s),
                    self.base.name(cur)
                ))
            })?;
            restrictions.push(r);
            cur = y;
        }
        let restriction = GroupWord::from_symbols(
            restrictions
                .iter()
                .rev()
                .flat_map(|r| r.symbols().iter().copied()),
        );
        Ok((cur, restriction))
    }

    /// `g·(x₁⋯xₙ) = (g·x₁)(g|_{x₁}·x₂⋯xₙ)`, letter by letter over the given
    /// word, which need not be in normal form.
    pub fn act_letters(
        &self,
        g: &GroupWord,
        word: &[LetterId],
    ) -> Result<(Vec<LetterId>, GroupWord)> {
        let mut cur = g.clone();
        let mut out = Vec::with_capacity(word.len());
        for &x in word {
            let (y, r) = self.act_letter(&cur, x)?;
            out.push(y);
            cur = r;
        }
        Ok((out, cur))
    }

    /// `(g·u, g|_u)`.
    pub fn act_word(&self, g: &GroupWord, u: &Element) -> Result<(Element, GroupWord)> {
        if !Arc::ptr_eq(u.presentation(), &self.base) && **u.presentation() != *self.base {
            return Err(Error::PresentationMismatch);
        }
        let (letters, r) = self.act_letters(g, u.letters())?;
        Ok((Element::from_word(&self.base, &letters)?, r))
    }

    /// `(u, g)(v, h) = (u·(g·v), (g|_v)·h)`.
    pub fn zs_multiply(
        &self,
        x: &GeneralizedElement,
        y: &GeneralizedElement,
    ) -> Result<GeneralizedElement> {
        let (gv, r) = self.act_word(&x.group, &y.monoid)?;
        Ok(GeneralizedElement::new(
            x.monoid.multiply(&gv)?,
            r.concat(&y.group),
        ))
    }

    pub fn unit(&self, g: GroupWord) -> GeneralizedElement {
        GeneralizedElement::new(Element::identity(&self.base), g)
    }

    pub fn from_monoid(&self, u: Element) -> GeneralizedElement {
        GeneralizedElement::new(u, GroupWord::identity())
    }

    /// Checks that the action is total, bijective and color preserving on
    /// letters, that inverse symbols undo their generators, and that every
    /// square `uv = v'u'` of the base is respected:
    /// `s·(uv) = s·(v'u')` and `s|_{uv} = s|_{v'u'}`.
    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();
        let mut fail = |message: String| {
            failures.push(Failure {
                kind: FailureKind::Action { message },
            })
        };
        let p = &self.base;
        let mut complete = true;
        for s in self.symbols() {
            for alphabet in p.alphabets() {
                let mut images = HashSet::new();
                for &x in alphabet {
                    match self.entry(s, x) {
                        None => {
                            complete = false;
                            fail(format!(
                                "missing entry {}·{}",
                                self.symbol_name(s),
                                p.name(x)
                            ));
                        }
                        Some((y, _)) => {
                            if p.color(y) != p.color(x) {
                                fail(format!(
                                    "{}·{} = {} changes color",
                                    self.symbol_name(s),
                                    p.name(x),
                                    p.name(y)
                                ));
                            }
                            if !images.insert(y) {
                                fail(format!(
                                    "{} is not injective: two letters map to {}",
                                    self.symbol_name(s),
                                    p.name(y)
                                ));
                            }
                        }
                    }
                }
            }
        }
        if !complete {
            return ValidationReport::new(failures);
        }
        for s in self.symbols() {
            let both = GroupWord(vec![s.inverse(), s]);
            for x in 0..p.letter_count() {
                let x = LetterId(x as u32);
                let (y, r) = self.act_letter(&both, x).expect("table is complete");
                if y != x || !r.is_identity() {
                    fail(format!(
                        "{} does not undo {} at {}",
                        self.symbol_name(s.inverse()),
                        self.symbol_name(s),
                        p.name(x)
                    ));
                }
            }
        }
        for ((u, v), (v2, u2)) in p.squares().entries() {
            for s in self.symbols() {
                let sw = GroupWord::symbol(s);
                let (l, lr) = self.act_letters(&sw, &[u, v]).expect("table is complete");
                let (r, rr) = self.act_letters(&sw, &[v2, u2]).expect("table is complete");
                let same_image = Element::from_word(p, &l).ok() == Element::from_word(p, &r).ok();
                if !same_image || lr != rr {
                    fail(format!(
                        "{} does not respect the square {} {} = {} {}",
                        self.symbol_name(s),
                        p.name(u),
                        p.name(v),
                        p.name(v2),
                        p.name(u2)
                    ));
                }
            }
        }
        ValidationReport::new(failures)
    }

    pub fn parse(text: &str, base: &Arc<Presentation>) -> Result<Self> {
        let syntax = |line: usize, message: String| Error::Syntax { line, message };
        let mut generators = Vec::new();
        let mut entries = Vec::new();
        let mut seen_base = false;
        for (n, line) in content_lines(text) {
            let (keyword, body) = line
                .split_once(':')
                .ok_or_else(|| syntax(n, format!("unrecognised line `{line}`")))?;
            match keyword.trim() {
                "base" => {
                    if seen_base {
                        return Err(syntax(n, "duplicate `base:` line".into()));
                    }
                    seen_base = true;
                }
                "generator" => {
                    let names: Vec<&str> = body.split_whitespace().collect();
                    match names.as_slice() {
                        [g] => generators.push((g.to_string(), format!("{g}^-1"))),
                        [g, h] => generators.push((g.to_string(), h.to_string())),
                        _ => return Err(syntax(n, "expected `generator: name [inverse]`".into())),
                    }
                }
                "act" => {
                    let (lhs, restriction) = body.split_once('|').unwrap_or((body, ""));
                    let (from, to) = lhs
                        .split_once("->")
                        .ok_or_else(|| syntax(n, "expected `act: s x -> y | r…`".into()))?;
                    let from: Vec<&str> = from.split_whitespace().collect();
                    let to: Vec<&str> = to.split_whitespace().collect();
                    if from.len() != 2 || to.len() != 1 {
                        return Err(syntax(n, "expected `act: s x -> y | r…`".into()));
                    }
                    entries.push((
                        n,
                        from[0].to_string(),
                        from[1].to_string(),
                        to[0].to_string(),
                        restriction.to_string(),
                    ));
                }
                other => return Err(syntax(n, format!("unknown keyword `{other}`"))),
            }
        }
        let mut action = SelfSimilarAction::new(base, generators)?;
        for (_, s, x, y, r) in entries {
            let s = action.symbol(&s)?;
            let (x, y) = (base.id(&x)?, base.id(&y)?);
            let r = action.parse_word(&r)?;
            action.set(s, x, y, r)?;
        }
        action.derive_inverses();
        Ok(action)
    }

    /// Canonical text: generators, then the forward entries letter by letter.
    /// Inverse entries are implied.
    pub fn render(&self, base_ref: &str) -> String {
        let mut out = format!("base: {base_ref}\n");
        for (g, h) in &self.generators {
            out.push_str(&format!("generator: {g} {h}\n"));
        }
        for s in self.symbols().into_iter().filter(|s| !s.inverse) {
            for x in 0..self.base.letter_count() {
                let x = LetterId(x as u32);
                if let Some((y, r)) = self.entry(s, x) {
                    let r = if r.is_identity() {
                        String::new()
                    } else {
                        format!(" {}", self.render_word(r))
                    };
                    out.push_str(&format!(
                        "act: {} {} -> {} |{}\n",
                        self.symbol_name(s),
                        self.base.name(x),
                        self.base.name(y),
                        r
                    ));
                }
            }
        }
        out
    }
}

impl fmt::Display for SelfSimilarAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("-"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn machine() -> SelfSimilarAction {
        fixtures::adding_machine()
    }

    fn el(a: &SelfSimilarAction, s: &str) -> Element {
        let names = crate::format::word_tokens(s);
        Element::from_names(a.base(), &names).unwrap()
    }

    #[test]
    fn adding_machine_increments() {
        let a = machine();
        let g = a.parse_word("g").unwrap();
        let (y, r) = a.act_word(&g, &el(&a, "0 0")).unwrap();
        assert_eq!(
            (y.to_inline(), a.render_word(&r)),
            ("1 0".into(), "ε".into())
        );
        let (y, r) = a.act_word(&g, &el(&a, "1 1 0")).unwrap();
        assert_eq!(
            (y.to_inline(), a.render_word(&r)),
            ("0 0 1".into(), "ε".into())
        );
        let (y, r) = a.act_word(&g, &el(&a, "1 1")).unwrap();
        assert_eq!(
            (y.to_inline(), a.render_word(&r)),
            ("0 0".into(), "g".into())
        );
        let ginv = a.parse_word("g^-1").unwrap();
        let (y, _) = a.act_word(&ginv, &el(&a, "0 0 1")).unwrap();
        assert_eq!(y.to_inline(), "1 1 0");
    }

    #[test]
    fn zappa_szep_product() {
        let a = machine();
        let x = a.parse_element("| g").unwrap();
        let y = a.parse_element("0 |").unwrap();
        assert_eq!(a.render_element(&a.zs_multiply(&x, &y).unwrap()), "1 | ε");
        let z = a.parse_element("1 | g").unwrap();
        assert_eq!(a.render_element(&a.zs_multiply(&x, &z).unwrap()), "0 | g g");
        assert!(a.zs_multiply(&z, &x).unwrap().size().components() == [1]);
    }

    #[test]
    fn adding_machine_validates() {
        let report = machine().validate();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn rsv_entries() {
        let a = fixtures::rsv_action().unwrap();
        assert!(a.validate().passed());
        let p = a.base();
        let (y, r) = a
            .act_letter(&a.parse_word("a1").unwrap(), p.id("c1").unwrap())
            .unwrap();
        assert_eq!(p.name(y), "c4");
        assert_eq!(a.render_word(&r), "a4");
    }

    #[test]
    fn incomplete_and_broken_actions_fail() {
        let base = Arc::new(Presentation::free_monoid(&["0", "1"]).unwrap());
        let a =
            SelfSimilarAction::parse("base: x\ngenerator: g\nact: g 0 -> 1 |\n", &base).unwrap();
        let report = a.validate();
        assert!(!report.passed());
        assert!(report.to_string().contains("missing entry g·1"));

        let b = SelfSimilarAction::parse(
            "base: x\ngenerator: g\nact: g 0 -> 1 |\nact: g 1 -> 1 |\n",
            &base,
        )
        .unwrap();
        assert!(b.validate().to_string().contains("not injective"));

        let err = SelfSimilarAction::parse("base: x\ngenerator: g\nact: h 0 -> 1 |\n", &base);
        assert_eq!(err.unwrap_err(), Error::UnknownGenerator("h".into()));
    }

    #[test]
    fn square_incompatible_action_fails() {
        let p = Arc::new(fixtures::prod22());
        // the restriction at a differs between the two orders of a α
        let text = "base: x\ngenerator: s\n\
                    act: s a -> b | s\nact: s b -> a |\n\
                    act: s α -> α |\nact: s β -> β |\n";
        let a = SelfSimilarAction::parse(text, &p).unwrap();
        let report = a.validate();
        assert!(report.to_string().contains("does not respect the square"));
    }

    #[test]
    fn render_round_trip() {
        for a in [machine(), fixtures::rsv_action().unwrap()] {
            let text = a.render("base.km");
            assert_eq!(base_reference(&text).unwrap(), "base.km");
            assert_eq!(SelfSimilarAction::parse(&text, a.base()).unwrap(), a);
        }
    }
}
