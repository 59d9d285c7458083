use serde_json::{json, Value};

use tlschur::combinatorics::{decomposition_matrix, projective_column, tilting_delta_mults, twisted_filtration, Weight};
use tlschur::domdim::{classify_projective, cover_report, cover_report_csv, hn_dimension, Regime};
use tlschur::hecke::BlessedConfig;
use tlschur::hook::{ProgressHook, Silent, StderrProgress};
use tlschur::tensor::{dump_action, hecke_action, tl_action};
use tlschur::tl::TlAlgebra;
use tlschur::verify::{all_pass, run_suite, VerifyOptions};
use tlschur::{Error, Field, PrimeField, Rationals, Result};

use crate::args::{ActionKind, Command, Format, TlArgs};

/// What a command produced, and whether its checks passed.
pub struct Report {
    pub text: String,
    pub passed: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, passed: true }
    }
}

fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn weights(ws: impl IntoIterator<Item = Weight>) -> Vec<usize> {
    ws.into_iter().map(Weight::value).collect()
}

fn join(ws: &[usize]) -> String {
    ws.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub fn run(command: &Command, format: Format) -> Result<Report> {
    match command {
        Command::Decomp { d } => {
            let table = decomposition_matrix(*d)?;
            Ok(Report::ok(match format {
                Format::Csv => table.to_csv(),
                Format::Json => table.to_json() + "\n",
                Format::Pretty => table.to_pretty(),
            }))
        }
        Command::Tilting { m } => tilting(*m, format),
        Command::Projective { d, m } => {
            let column = weights(projective_column(*d, Weight(*m))?);
            let class = classify_projective(*d, Weight(*m))?;
            let domdim = class.as_extended();
            Ok(Report::ok(match format {
                Format::Csv => format!("d,m,delta_weights,domdim\n{d},{m},\"{}\",{domdim}\n", join(&column)),
                Format::Json => to_json(&json!({ "d": d, "m": m, "delta_weights": column, "domdim": domdim })),
                Format::Pretty => format!("P_{d}({m}): Δ-weights [{}]\ndomdim: {domdim}\n", join(&column)),
            }))
        }
        Command::Domdim { d, regime, to } => {
            let regime = Regime::parse(regime)?;
            match to {
                Some(to) if to < d => Err(Error::Usage(format!("--to {to} is below --d {d}"))),
                Some(to) => batch(*d..=*to, regime, format),
                None if format == Format::Csv => Ok(Report::ok(cover_report_csv(*d..=*d, regime)?)),
                None => {
                    let r = cover_report(*d, regime)?;
                    Ok(Report::ok(match format {
                        Format::Json => to_json(&serde_json::to_value(&r).expect("reports serialize")),
                        _ => {
                            let regular = r.domdim_regular.map_or_else(|| "n/a".to_string(), |x| x.to_string());
                            let mut s = format!(
                                "d = {}, regime {}\ndomdim (regular): {regular}\ndomdim (tilting): {}\nHemmer-Nakano dimension: {}\n{}\n",
                                r.d, r.regime, r.domdim_tilting, r.hn_dim, r.delta
                            );
                            for note in &r.notes {
                                s.push_str(&format!("- {note}\n"));
                            }
                            s
                        }
                    }))
                }
            }
        }
        Command::Hn { d, ring } => {
            let regime = Regime::parse(ring)?;
            let hn = hn_dimension(*d, regime)?;
            Ok(Report::ok(match format {
                Format::Csv => format!("d,ring,hn_dim\n{d},{ring},{hn}\n"),
                Format::Json => to_json(&json!({ "d": d, "ring": ring, "hn_dim": hn })),
                Format::Pretty => format!("{hn}\n"),
            }))
        }
        Command::Tl(args) => tl(args, format),
        Command::Verify {
            d,
            config,
            cap,
            progress,
        } => {
            let config = BlessedConfig::parse(config)?;
            let hook: &dyn ProgressHook = if *progress { &StderrProgress } else { &Silent };
            let options = VerifyOptions {
                cap: *cap,
                ..VerifyOptions::default()
            };
            let verdicts = run_suite(config, *d, options, hook)?;
            let passed = all_pass(&verdicts);
            let text = match format {
                Format::Json => to_json(&serde_json::to_value(&verdicts).expect("verdicts serialize")),
                Format::Csv => {
                    let mut s = String::from("check_id,d,config,expected,got,pass\n");
                    for v in &verdicts {
                        s.push_str(&format!(
                            "{},{},{},{},{},{}\n",
                            v.check_id,
                            v.d,
                            v.config,
                            csv_cell(&v.expected),
                            csv_cell(&v.got),
                            v.pass
                        ));
                    }
                    s
                }
                Format::Pretty => {
                    let width = verdicts.iter().map(|v| v.check_id.len()).max().unwrap_or(0);
                    let mut s = String::new();
                    for v in &verdicts {
                        s.push_str(&format!(
                            "{} {:<width$}  expected {}  got {}\n",
                            if v.pass { "PASS" } else { "FAIL" },
                            v.check_id,
                            v.expected,
                            v.got
                        ));
                    }
                    s
                }
            };
            Ok(Report { text, passed })
        }
        Command::Action {
            d,
            config,
            generator,
            kind,
        } => {
            let params = BlessedConfig::parse(config)?.params(*d);
            let action = match kind {
                ActionKind::Hecke => hecke_action(&params, *generator)?,
                ActionKind::Tl => tl_action(&params, *generator)?,
            };
            let (header, body) = dump_action(&params, &action)?;
            Ok(Report::ok(match format {
                Format::Csv => body,
                Format::Json => {
                    let header: Value = serde_json::from_str(&header).map_err(|e| Error::Parse(e.to_string()))?;
                    let rows: Vec<&str> = body.lines().collect();
                    to_json(&json!({ "header": header, "rows": rows }))
                }
                Format::Pretty => format!("{header}\n{body}"),
            }))
        }
    }
}

fn csv_cell(v: &Value) -> String {
    let s = v.to_string();
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

fn tilting(m: usize, format: Format) -> Result<Report> {
    let mults = weights(tilting_delta_mults(Weight(m))?.iter().copied());
    let filtration: Option<Vec<(usize, usize)>> = if m >= 2 && m.is_multiple_of(2) {
        Some(
            twisted_filtration(Weight(m))?
                .into_iter()
                .map(|(a, b)| (a.value(), b.value()))
                .collect(),
        )
    } else {
        None
    };
    Ok(Report::ok(match format {
        Format::Json => to_json(&json!({ "m": m, "delta_weights": mults, "twisted_filtration": filtration })),
        Format::Csv => {
            let mut s = format!("kind,weights\ndelta,\"{}\"\n", join(&mults));
            for (a, b) in filtration.iter().flatten() {
                s.push_str(&format!("twisted,\"{a},{b}\"\n"));
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("T({m}): Δ-weights [{}]\n", join(&mults));
            if let Some(f) = &filtration {
                let pairs: Vec<String> = f.iter().map(|(a, b)| format!("(Δ({a}), Δ({b}))")).collect();
                s.push_str(&format!("twisted filtration: {}\n", pairs.join(" ")));
            }
            s
        }
    }))
}

fn batch(range: std::ops::RangeInclusive<usize>, regime: Regime, format: Format) -> Result<Report> {
    match format {
        Format::Json => {
            let reports = range.map(|d| cover_report(d, regime)).collect::<Result<Vec<_>>>()?;
            Ok(Report::ok(to_json(&serde_json::to_value(&reports).expect("reports serialize"))))
        }
        _ => Ok(Report::ok(cover_report_csv(range, regime)?)),
    }
}

fn parse_field(name: &str) -> Result<Option<PrimeField>> {
    let trimmed = name.trim();
    if matches!(trimmed, "Q" | "q" | "QQ" | "rational" | "rationals") {
        return Ok(None);
    }
    let digits = trimmed
        .strip_prefix("GF(")
        .or_else(|| trimmed.strip_prefix("gf("))
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed);
    let p: u32 = digits
        .parse()
        .map_err(|_| Error::Usage(format!("unknown field {name:?}; expected Q or a prime")))?;
    Ok(Some(PrimeField::new(p)?))
}

fn tl(args: &TlArgs, format: Format) -> Result<Report> {
    match parse_field(&args.field)? {
        None => tl_in(&Rationals, args, format),
        Some(f) => tl_in(&f, args, format),
    }
}

fn tl_in<F: Field>(field: &F, args: &TlArgs, format: Format) -> Result<Report> {
    let delta = field.parse_elem(&args.delta)?;
    let algebra = TlAlgebra::new(field, args.d, delta);
    let element = algebra.word(&args.word)?;
    let relations = algebra.check_relations()?;
    let passed = relations.all_hold();
    let terms: Vec<(String, String)> = element
        .terms()
        .map(|(diagram, c)| (diagram.to_string(), field.format_elem(c)))
        .collect();
    let text = match format {
        Format::Json => to_json(&json!({
            "d": args.d,
            "field": field.tag().to_string(),
            "delta": field.format_elem(algebra.delta()),
            "word": args.word,
            "terms": terms.iter().map(|(d, c)| json!({ "diagram": d, "coefficient": c })).collect::<Vec<_>>(),
            "relations_checked": relations.checked,
            "violations": relations.violations,
        })),
        Format::Csv => {
            let mut s = String::from("diagram,coefficient\n");
            for (d, c) in &terms {
                s.push_str(&format!("\"{d}\",{c}\n"));
            }
            s
        }
        Format::Pretty => {
            let word = if args.word.trim().is_empty() { "1" } else { args.word.trim() };
            let mut s = format!("{word} = {element}\n");
            s.push_str(&format!(
                "relations: {} checked, {}\n",
                relations.checked,
                if passed {
                    "all hold".to_string()
                } else {
                    format!("violated: {}", relations.violations.join(", "))
                }
            ));
            s
        }
    };
    Ok(Report { text, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names() {
        assert!(parse_field("Q").unwrap().is_none());
        assert_eq!(parse_field("GF(5)").unwrap().unwrap().modulus(), 5);
        assert_eq!(parse_field("2").unwrap().unwrap().modulus(), 2);
        assert!(parse_field("GF(4)").is_err());
        assert!(parse_field("R").is_err());
    }
}
