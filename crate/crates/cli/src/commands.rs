use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use kmonoid_core::codes::{alignment_probe, common_upper, is_maximal_code, Code};
use kmonoid_core::fixtures;
use kmonoid_core::group::CodeBijection;
use kmonoid_core::props::algebraic_laws;
use kmonoid_core::selfsim::{base_reference, wfp_check, zappa_szep_identities, SelfSimilarAction};
use kmonoid_core::{Degree, Element, Error, FailureKind, Presentation, ValidationReport};
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::{Cli, CodeOp, Command, Format, GroupOp, SelfsimOp};

/// Lines for stdout, a message for stderr and the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub lines: Vec<String>,
    pub error: Option<String>,
    pub code: u8,
}

enum Failure {
    Usage(String),
    Squares(String),
    Semantic(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IncompleteSquares(_) => Failure::Squares(e.to_string()),
            other => Failure::Semantic(other.to_string()),
        }
    }
}

type Run = Result<Outcome, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(outcome) => outcome,
        Err(Failure::Usage(m)) => Outcome {
            error: Some(m),
            code: 1,
            ..Outcome::default()
        },
        Err(Failure::Squares(m)) => Outcome {
            error: Some(m),
            code: 2,
            ..Outcome::default()
        },
        Err(Failure::Semantic(m)) => Outcome {
            error: Some(m),
            code: 4,
            ..Outcome::default()
        },
    }
}

fn ok(lines: Vec<String>) -> Run {
    Ok(Outcome {
        lines,
        ..Outcome::default()
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Arc<Presentation>, Failure> {
    Ok(Arc::new(Presentation::parse(&read(path)?)?))
}

fn load_action(path: &Path) -> Result<SelfSimilarAction, Failure> {
    let text = read(path)?;
    let base_path: PathBuf = path
        .parent()
        .unwrap_or_else(|| Path::new("."))
        .join(base_reference(&text)?);
    let base = load(&base_path)?;
    Ok(SelfSimilarAction::parse(&text, &base)?)
}

fn degree(text: &str, k: usize) -> Result<Degree, Failure> {
    let d: Degree = text.parse()?;
    if d.k() == 1 && k > 1 {
        return Ok(Degree::new(vec![d.components()[0]; k]));
    }
    if d.k() != k {
        return Err(Error::Dimension {
            expected: k,
            found: d.k(),
        }
        .into());
    }
    Ok(d)
}

fn element(p: &Arc<Presentation>, letters: &[String]) -> Result<Element, Failure> {
    let names: Vec<&str> = letters
        .iter()
        .flat_map(|l| l.split_whitespace())
        .filter(|l| *l != "ε")
        .collect();
    Ok(Element::from_names(p, &names)?)
}

/// `color i: …` lines, or one `i<TAB>letters` record per color.
fn element_lines(x: &Element, format: Format) -> Vec<String> {
    match format {
        Format::Text => x.to_color_lines(),
        Format::Tabular => x
            .to_color_lines()
            .into_iter()
            .map(|l| {
                let (head, rest) = l.split_once(':').unwrap_or((&l, ""));
                format!("{}\t{}", head.trim_start_matches("color "), rest.trim())
            })
            .collect(),
    }
}

fn report_lines(report: &ValidationReport, format: Format) -> Vec<String> {
    match format {
        Format::Text => report.to_string().lines().map(str::to_string).collect(),
        Format::Tabular => {
            let mut lines = vec![format!(
                "status\t{}",
                if report.passed() { "pass" } else { "fail" }
            )];
            for f in report.failures() {
                let kind = match f.kind {
                    FailureKind::MissingSquare { .. } => "missing",
                    FailureKind::NotInverse { .. } => "inverse",
                    FailureKind::Cube { .. } => "cube",
                    FailureKind::Action { .. } => "action",
                };
                lines.push(format!("{kind}\t{f}"));
            }
            lines
        }
    }
}

fn key_value(key: &str, value: impl std::fmt::Display, format: Format) -> String {
    match format {
        Format::Text => format!("{key}: {value}"),
        Format::Tabular => format!("{key}\t{value}"),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dispatch(cli: &Cli) -> Run {
    let format = cli.format;
    match &cli.command {
        Command::Validate { file } => {
            let p = match Presentation::parse(&read(file)?) {
                Ok(p) => p,
                Err(e @ Error::IncompleteSquares(_)) => {
                    let status = match format {
                        Format::Text => "fail".to_string(),
                        Format::Tabular => "status\tfail".to_string(),
                    };
                    let lines = vec![status, e.to_string()];
                    return Ok(Outcome {
                        lines,
                        code: 2,
                        error: None,
                    });
                }
                Err(e) => return Err(e.into()),
            };
            let squares = p.validate_squares();
            let report = if squares.passed() {
                p.validate_associativity()
            } else {
                squares.clone()
            };
            let code = if !squares.passed() {
                2
            } else if !report.passed() {
                3
            } else {
                0
            };
            Ok(Outcome {
                lines: report_lines(&report, format),
                code,
                error: None,
            })
        }
        Command::Nf { file, letters } => {
            let p = load(file)?;
            ok(element_lines(&element(&p, letters)?, format))
        }
        Command::Mul { file, lhs, rhs } => {
            let p = load(file)?;
            let x = element(&p, lhs)?.multiply(&element(&p, rhs)?)?;
            ok(element_lines(&x, format))
        }
        Command::Factor { file, letters, at } => {
            let p = load(file)?;
            let x = element(&p, letters)?;
            let (l, r) = x.factor(&degree(at, p.k())?)?;
            let mut lines = Vec::new();
            for (label, part) in [("left", l), ("right", r)] {
                match format {
                    Format::Text => {
                        lines.push(format!("{label}:"));
                        lines.extend(element_lines(&part, format));
                    }
                    Format::Tabular => lines.extend(
                        element_lines(&part, format)
                            .into_iter()
                            .map(|l| format!("{label}\t{l}")),
                    ),
                }
            }
            ok(lines)
        }
        Command::Join { file, a, b } => {
            let p = load(file)?;
            let join = common_upper(&element(&p, a)?, &element(&p, b)?)?;
            ok(join.to_lines())
        }
        Command::Code { op } => {
            let (args, maximal) = match op {
                CodeOp::Check(args) => (args, false),
                CodeOp::Maximal(args) => (args, true),
            };
            let p = load(&args.file)?;
            let text = read(&args.code)?;
            if !maximal {
                let elements = kmonoid_core::format::parse_word_list(&text)
                    .into_iter()
                    .map(|(_, w)| Element::from_names(&p, &w))
                    .collect::<Result<Vec<_>, _>>()?;
                let is_code = kmonoid_core::codes::is_prefix_code(&elements)?;
                return ok(vec![key_value("prefix code", yes_no(is_code), format)]);
            }
            let code = Code::parse(&p, &text)?;
            ok(vec![key_value(
                "maximal",
                yes_no(is_maximal_code(&code)?),
                format,
            )])
        }
        Command::Group { op } => group(op, format),
        Command::Selfsim { op } => selfsim(op, format),
        Command::Fixture { name, out } => {
            let files = fixtures::emit(name).map_err(|e| Failure::Usage(e.to_string()))?;
            fs::create_dir_all(out)
                .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", out.display())))?;
            let mut lines = Vec::new();
            for (file, contents) in files {
                let path = out.join(&file);
                fs::write(&path, contents)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                lines.push(path.display().to_string());
            }
            ok(lines)
        }
        Command::Align { file, bound } => {
            let p = load(file)?;
            let report = alignment_probe(&p, &degree(bound, p.k())?)?;
            let mut lines = vec![
                key_value("bound", &report.bound, format),
                key_value("comparable pairs", report.comparable_pairs, format),
                key_value("max join size", report.max_join_size, format),
            ];
            if let Some((a, b)) = &report.witness {
                lines.push(key_value("witness", format!("{a} / {b}"), format));
            }
            lines.push(key_value(
                "singly aligned",
                yes_no(report.singly_aligned()),
                format,
            ));
            ok(lines)
        }
        Command::Props { file, cases, max } => {
            let p = load(file)?;
            let max = match max {
                Some(m) => degree(m, p.k())?,
                None => Degree::new(vec![2; p.k()]),
            };
            let mut rng = StdRng::seed_from_u64(cli.seed);
            let report = algebraic_laws(&p, &max, *cases, &mut rng)?;
            let mut lines = vec![
                key_value("seed", cli.seed, format),
                key_value("cases", cases, format),
                key_value("checks", report.checked, format),
                key_value("failures", report.failed, format),
            ];
            lines.extend(report.failures.iter().cloned());
            Ok(Outcome {
                lines,
                code: if report.passed() { 0 } else { 4 },
                error: None,
            })
        }
    }
}

fn group(op: &GroupOp, format: Format) -> Run {
    let (args, arity) = match op {
        GroupOp::Compose(a) => (a, 2),
        GroupOp::Invert(a) => (a, 1),
        GroupOp::Equal(a) => (a, 2),
    };
    if args.elts.len() != arity {
        return Err(Failure::Usage(format!(
            "expected {arity} --elt argument(s), found {}",
            args.elts.len()
        )));
    }
    let p = load(&args.file)?;
    let elts = args
        .elts
        .iter()
        .map(|path| Ok(CodeBijection::parse(&p, &read(path)?)?))
        .collect::<Result<Vec<_>, Failure>>()?;
    let bijection_lines = |b: &CodeBijection| -> Vec<String> {
        b.pairs()
            .map(|(d, r)| match format {
                Format::Text => format!("{} -> {}", d.to_inline(), r.to_inline()),
                Format::Tabular => format!("{}\t{}", d.to_inline(), r.to_inline()),
            })
            .collect()
    };
    match op {
        GroupOp::Compose(_) => ok(bijection_lines(&elts[0].compose(&elts[1])?)),
        GroupOp::Invert(_) => ok(bijection_lines(&elts[0].inverse())),
        GroupOp::Equal(_) => ok(vec![key_value(
            "equal",
            yes_no(elts[0].equal_in_group(&elts[1])?),
            format,
        )]),
    }
}

fn selfsim(op: &SelfsimOp, format: Format) -> Run {
    match op {
        SelfsimOp::Act {
            action,
            word,
            letters,
        } => {
            let a = load_action(action)?;
            let g = a.parse_word(word)?;
            let u = element(a.base(), letters)?;
            let (image, restriction) = a.act_word(&g, &u)?;
            ok(vec![
                key_value("image", image.to_inline(), format),
                key_value("restriction", a.render_word(&restriction), format),
            ])
        }
        SelfsimOp::Mul { action, lhs, rhs } => {
            let a = load_action(action)?;
            let x = a.zs_multiply(&a.parse_element(lhs)?, &a.parse_element(rhs)?)?;
            ok(vec![key_value("product", a.render_element(&x), format)])
        }
        SelfsimOp::Check {
            action,
            bound,
            window,
        } => {
            let a = load_action(action)?;
            let base = a.base().validate();
            if !base.passed() {
                let code = if base.failures().iter().any(|f| f.is_square_failure()) {
                    2
                } else {
                    3
                };
                return Ok(Outcome {
                    lines: report_lines(&base, format),
                    code,
                    error: None,
                });
            }
            let report = a.validate();
            let mut lines = Vec::new();
            lines.push(key_value(
                "action",
                if report.passed() { "pass" } else { "fail" },
                format,
            ));
            lines.extend(report.failures().iter().map(|f| f.to_string()));
            if !report.passed() {
                return Ok(Outcome {
                    lines,
                    code: 4,
                    error: None,
                });
            }
            let identities = zappa_szep_identities(&a)?;
            lines.push(key_value(
                "identities",
                format!(
                    "{} checked, {} failed",
                    identities.checked, identities.failed
                ),
                format,
            ));
            lines.extend(identities.failures.iter().cloned());
            let wfp = wfp_check(&a, &degree(bound, a.base().k())?, *window)?;
            lines.push(key_value(
                "wfp",
                format!(
                    "bound {} window {}: {} elements, {} splits, {} alternatives, {} inconclusive, {} failures",
                    wfp.bound,
                    wfp.window,
                    wfp.targets,
                    wfp.splits,
                    wfp.alternatives,
                    wfp.inconclusive,
                    wfp.failures.len()
                ),
                format,
            ));
            lines.extend(wfp.failures.iter().cloned());
            let passed = identities.passed() && wfp.passed();
            Ok(Outcome {
                lines,
                code: if passed { 0 } else { 4 },
                error: None,
            })
        }
    }
}
