//! The degree lattice ℕ^k.
//!
//! Degrees are compared componentwise. The ambient `k` is carried by the
//! presentation rather than by the degree itself, so every binary operation
//! checks that both operands have the same length.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A color, numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(usize);

impl Color {
    pub fn new(index: usize, k: usize) -> Result<Self> {
        if index == 0 || index > k {
            return Err(Error::ColorOutOfRange { color: index, k });
        }
        Ok(Color(index))
    }

    /// 1-based index.
    pub fn index(self) -> usize {
        self.0
    }

    /// 0-based slot, for indexing per-color vectors.
    pub fn slot(self) -> usize {
        self.0 - 1
    }

    pub(crate) fn from_slot(slot: usize) -> Self {
        Color(slot + 1)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Degree(Vec<u32>);

/// Componentwise summary of two degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeOps {
    pub leq: bool,
    pub join: Degree,
    pub meet: Degree,
    pub sum: Degree,
    pub diff: Option<Degree>,
}

impl Degree {
    pub fn new(components: Vec<u32>) -> Self {
        Degree(components)
    }

    pub fn zero(k: usize) -> Self {
        Degree(vec![0; k])
    }

    /// The basis vector 𝐞_i of ℕ^k.
    pub fn basis(color: usize, k: usize) -> Result<Self> {
        let c = Color::new(color, k)?;
        let mut v = vec![0; k];
        v[c.slot()] = 1;
        Ok(Degree(v))
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, color: Color) -> u32 {
        self.0[color.slot()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Sum of all components.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    fn check(&self, other: &Degree) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::Dimension {
                expected: self.0.len(),
                found: other.0.len(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Degree, f: impl Fn(u32, u32) -> u32) -> Result<Degree> {
        self.check(other)?;
        Ok(Degree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        ))
    }

    pub fn leq(&self, other: &Degree) -> Result<bool> {
        self.check(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    pub fn join(&self, other: &Degree) -> Result<Degree> {
        self.zip_with(other, u32::max)
    }

    pub fn meet(&self, other: &Degree) -> Result<Degree> {
        self.zip_with(other, u32::min)
    }

    pub fn add(&self, other: &Degree) -> Result<Degree> {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self − other`, present only when `other ≤ self`.
    pub fn diff(&self, other: &Degree) -> Result<Option<Degree>> {
        if !other.leq(self)? {
            return Ok(None);
        }
        Ok(Some(self.zip_with(other, |a, b| a - b)?))
    }

    pub fn lattice_ops(&self, other: &Degree) -> Result<LatticeOps> {
        Ok(LatticeOps {
            leq: self.leq(other)?,
            join: self.join(other)?,
            meet: self.meet(other)?,
            sum: self.add(other)?,
            diff: self.diff(other)?,
        })
    }

    /// Join of a family of degrees; `zero(k)` for the empty family.
    pub fn join_all<'a>(k: usize, degrees: impl IntoIterator<Item = &'a Degree>) -> Result<Degree> {
        degrees
            .into_iter()
            .try_fold(Degree::zero(k), |acc, d| acc.join(d))
    }

    /// Every degree `d` with `0 ≤ d ≤ self`, in lexicographic order.
    pub fn below(&self) -> Vec<Degree> {
        let mut out = vec![Vec::with_capacity(self.k())];
        for &bound in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=bound).map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Degree).collect()
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Accepts `1,2,3` or `(1,2,3)`.
impl FromStr for Degree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Degree(Vec::new()));
        }
        body.split(',')
            .map(|part| {
                part.trim().parse::<u32>().map_err(|_| Error::Syntax {
                    line: 0,
                    message: format!("bad degree component `{part}`"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Degree)
    }
}
