use std::fmt;

/// What went wrong, with the letters that witness it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FailureKind {
    /// No square for the ordered pair `(u, v)`.
    MissingSquare { u: String, v: String },
    /// `(u, v) -> (v', u')` but `(v', u')` maps somewhere other than `(u, v)`.
    NotInverse {
        u: String,
        v: String,
        image: (String, String),
        back: (String, String),
    },
    /// The two routes around the cube spanned by `f`, `g`, `h` disagree.
    /// Routes are listed as `(h, g, f)` images.
    Cube {
        triple: (String, String, String),
        route_a: (String, String, String),
        route_b: (String, String, String),
    },
    /// A self-similar action defect.
    Action { message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub kind: FailureKind,
}

impl Failure {
    pub fn is_square_failure(&self) -> bool {
        matches!(
            self.kind,
            FailureKind::MissingSquare { .. } | FailureKind::NotInverse { .. }
        )
    }

    pub fn is_cube_failure(&self) -> bool {
        matches!(self.kind, FailureKind::Cube { .. })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FailureKind::MissingSquare { u, v } => write!(f, "missing square: ({u},{v})"),
            FailureKind::NotInverse { u, v, image, back } => write!(
                f,
                "not inverse: ({u},{v}) -> ({},{}) but ({},{}) -> ({},{})",
                image.0, image.1, image.0, image.1, back.0, back.1
            ),
            FailureKind::Cube {
                triple,
                route_a,
                route_b,
            } => {
                write!(
                    f,
                    "cube ({},{},{}): route A ({},{},{}) != route B ({},{},{})",
                    triple.0,
                    triple.1,
                    triple.2,
                    route_a.0,
                    route_a.1,
                    route_a.2,
                    route_b.0,
                    route_b.1,
                    route_b.2
                )?;
                let labels = ["h", "g", "f"];
                let a = [&route_a.0, &route_a.1, &route_a.2];
                let b = [&route_b.0, &route_b.1, &route_b.2];
                for i in 0..3 {
                    if a[i] != b[i] {
                        write!(f, " [{}: {} vs {}]", labels[i], a[i], b[i])?;
                    }
                }
                Ok(())
            }
            FailureKind::Action { message } => write!(f, "action: {message}"),
        }
    }
}

/// Result of a validator. Failures are kept sorted so reports are
/// reproducible.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    failures: Vec<Failure>,
}

impl ValidationReport {
    pub fn new(mut failures: Vec<Failure>) -> Self {
        failures.sort();
        failures.dedup();
        ValidationReport { failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn merge(mut self, other: ValidationReport) -> Self {
        self.failures.extend(other.failures);
        ValidationReport::new(self.failures)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "pass");
        }
        writeln!(f, "fail")?;
        for failure in &self.failures {
            writeln!(f, "{failure}")?;
        }
        Ok(())
    }
}

/// Counts and failures of a sampled or windowed law check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checked: usize,
    pub failed: usize,
    /// The first few failures.
    pub failures: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn record(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 64 {
                self.failures.push(message());
            }
        }
    }

    pub fn merge(mut self, other: LawReport) -> LawReport {
        self.checked += other.checked;
        self.failed += other.failed;
        self.failures.extend(other.failures);
        self.failures.truncate(64);
        self
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "checked: {}", self.checked)?;
        if self.passed() {
            return writeln!(f, "pass");
        }
        writeln!(f, "fail ({} failures)", self.failed)?;
        for m in &self.failures {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}
