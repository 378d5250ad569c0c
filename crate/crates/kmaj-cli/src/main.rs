//! `kmaj` — k-statistics on words and standard Young tableaux, the
//! maj-transfer bijections, equivalence classes, q-distributions, and the
//! exhaustive verification suites.
//!
//! Exit codes: 0 on success / suite pass, 1 on suite failure, 2 on
//! malformed input. `KMAJ_THREADS` caps the suite worker pool.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kmaj::bijections;
use kmaj::distribution::{self, Statistic};
use kmaj::equivalence;
use kmaj::tableau::{self, StandardTableau};
use kmaj::verify;
use kmaj::word::Word;
use kmaj::{IndexPairSet, Multiset, Partition};

#[derive(Parser)]
#[command(
    name = "kmaj",
    version,
    about = "k-descent statistics, maj-transfer bijections and exhaustive verification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatArg {
    /// Classical major index.
    Maj,
    /// Classical inversion number.
    Inv,
    /// k-major index at the level given by --k.
    Majk,
}

#[derive(Subcommand)]
enum Command {
    /// k-descent set, k-inversion set, k-major index and (for permutations)
    /// the inverse descent set of a word.
    Stats {
        /// Word: space/comma separated letters, `_` for a spacer.
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Apply the maj-transfer bijection at step k to a word.
    Phi {
        #[arg(long)]
        word: String,
        #[arg(long)]
        k: usize,
    },
    /// Apply the inverse transfer at step k to a word.
    Psi {
        #[arg(long)]
        word: String,
        #[arg(long)]
        k: usize,
    },
    /// Compose the transfers from level `from-k` up to level `to-k`,
    /// carrying maj_{from-k} to maj_{to-k}.
    Phirange {
        #[arg(long)]
        word: String,
        #[arg(long)]
        to_k: usize,
        #[arg(long)]
        from_k: usize,
    },
    /// The classical second fundamental transformation (maj to inv).
    Foata {
        #[arg(long)]
        word: String,
    },
    /// Tableau k-descent set, k-inversion set and k-major index.
    Tstats {
        /// Tableau: `/`-separated rows, bottom row first.
        #[arg(long)]
        tableau: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Allow k > 3 via the naive extension (known to break the
        /// transfer; see the k4-breakdown suite).
        #[arg(long)]
        experimental: bool,
    },
    /// Apply the tableau maj-transfer bijection at step k.
    #[command(name = "Phi")]
    PhiTableau {
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        k: usize,
        /// Allow k > 3 via the naive extension.
        #[arg(long)]
        experimental: bool,
    },
    /// Row-insertion correspondence for a permutation; Q's descent
    /// positions equal the inverse descent set.
    Rsk {
        #[arg(long)]
        word: String,
    },
    /// Distribution generating polynomial over words on a multiset (with
    /// optional fixed spacers) or over the standard tableaux of a shape.
    Dist {
        /// Multiset as value:multiplicity pairs, e.g. `1:2,2:1`.
        #[arg(long, conflicts_with = "shape")]
        multiset: Option<String>,
        /// Fixed spacer positions, e.g. `2,5` (word mode only).
        #[arg(long, requires = "multiset")]
        spacers: Option<String>,
        /// Partition shape, e.g. `4,3,1` (tableau mode).
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Word statistic to sum over (word mode only).
        #[arg(long, value_enum, default_value_t = StatArg::Majk)]
        stat: StatArg,
    },
    /// Partition the permutations of 1..=n into orbit classes of the
    /// distance-switched involutions at level k.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Fixed spacer positions, e.g. `2,5`.
        #[arg(long)]
        spacers: Option<String>,
    },
    /// Run a named verification suite.
    Verify {
        /// One of: mahonian, mahonian-syt, phi-props, phi2-commute,
        /// nclass, schur-shape, theta-check, k4-breakdown.
        suite: String,
        /// Override the suite's default search bound.
        #[arg(long)]
        max_size: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn parse_word(s: &str) -> Result<Word, String> {
    Word::from_str(s).map_err(|e| e.to_string())
}

fn parse_tableau(s: &str) -> Result<StandardTableau, String> {
    StandardTableau::from_str(s).map_err(|e| e.to_string())
}

fn parse_positions(s: &str) -> Result<BTreeSet<usize>, String> {
    let mut out = BTreeSet::new();
    for tok in s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        let p: usize = tok
            .parse()
            .map_err(|_| format!("bad position {tok:?} in spacer list"))?;
        if p == 0 {
            return Err("positions are 1-based".into());
        }
        out.insert(p);
    }
    Ok(out)
}

fn pair_set_json(set: &IndexPairSet) -> Value {
    Value::Array(
        set.iter()
            .map(|(i, j)| Value::Array(vec![i.into(), j.into()]))
            .collect(),
    )
}

fn pair_set_csv(set: &IndexPairSet) -> String {
    set.iter()
        .map(|(i, j)| format!("{i}-{j}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_rows(format: Format, rows: &[(&str, String)], payload: Value) {
    match format {
        Format::Text => {
            for (name, value) in rows {
                println!("{name}: {value}");
            }
        }
        Format::Json => println!("{payload}"),
        Format::Csv => {
            println!("field,value");
            for (name, value) in rows {
                println!("{name},{value}");
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match cli.command {
        Command::Stats { word, k } => {
            if k < 1 {
                return Err("k must be at least 1".into());
            }
            let w = parse_word(&word)?;
            let des = w.descent_set_k(k);
            let inv_set = w.inversion_set_k(k);
            let maj_k = w.maj_k(k);
            let ides = w.ides().ok();
            let mut rows = vec![
                ("word", w.to_string()),
                ("k", k.to_string()),
                ("des_k", des.to_string()),
                ("inv_k", inv_set.to_string()),
                ("maj_k", maj_k.to_string()),
                ("maj", w.maj().to_string()),
                ("inv", w.inv().to_string()),
            ];
            if let Some(ides) = &ides {
                rows.push(("ides", format!("{ides:?}")));
            }
            if format == Format::Csv {
                rows[2].1 = pair_set_csv(&des);
                rows[3].1 = pair_set_csv(&inv_set);
                if let Some(ides) = &ides {
                    rows.last_mut().unwrap().1 = ides
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(" ");
                }
            }
            let payload = json!({
                "word": w.to_string(),
                "k": k,
                "des_k": pair_set_json(&des),
                "inv_k": pair_set_json(&inv_set),
                "maj_k": maj_k,
                "maj": w.maj(),
                "inv": w.inv(),
                "ides": ides,
            });
            print_rows(format, &rows, payload);
            Ok(ExitCode::SUCCESS)
        }
        Command::Phi { word, k } | Command::Psi { word, k } if k < 2 => {
            let _ = (word, k);
            Err("the transfer bijections need k >= 2".into())
        }
        Command::Phi { word, k } => {
            let w = parse_word(&word)?;
            let image = bijections::phi(&w, k);
            word_image_output(format, "phi", &w, k, &image);
            Ok(ExitCode::SUCCESS)
        }
        Command::Psi { word, k } => {
            let w = parse_word(&word)?;
            let image = bijections::psi(&w, k);
            word_image_output(format, "psi", &w, k, &image);
            Ok(ExitCode::SUCCESS)
        }
        Command::Phirange { word, to_k, from_k } => {
            let w = parse_word(&word)?;
            let image = bijections::phi_range(&w, to_k, from_k).map_err(|e| e.to_string())?;
            let rows = [
                ("word", w.to_string()),
                ("from_k", from_k.to_string()),
                ("to_k", to_k.to_string()),
                ("image", image.to_string()),
            ];
            let payload = json!({
                "word": w.to_string(),
                "from_k": from_k,
                "to_k": to_k,
                "image": image.to_string(),
            });
            print_rows(format, &rows, payload);
            Ok(ExitCode::SUCCESS)
        }
        Command::Foata { word } => {
            let w = parse_word(&word)?;
            let image = bijections::foata(&w).map_err(|e| e.to_string())?;
            let rows = [("word", w.to_string()), ("image", image.to_string())];
            let payload = json!({ "word": w.to_string(), "image": image.to_string() });
            print_rows(format, &rows, payload);
            Ok(ExitCode::SUCCESS)
        }
        Command::Tstats {
            tableau,
            k,
            experimental,
        } => {
            let t = parse_tableau(&tableau)?;
            if k < 1 {
                return Err("k must be at least 1".into());
            }
            let (des, inv_set, maj_k) = if experimental {
                (
                    tableau::experimental::descent_set_k(&t, k),
                    tableau::experimental::inversion_set_k(&t, k),
                    tableau::experimental::maj_k(&t, k),
                )
            } else {
                (
                    t.descent_set_k(k).map_err(|e| e.to_string())?,
                    t.inversion_set_k(k).map_err(|e| e.to_string())?,
                    t.maj_k(k).map_err(|e| e.to_string())?,
                )
            };
            let mut rows = vec![
                ("tableau", t.to_string()),
                ("shape", t.shape().to_string()),
                ("k", k.to_string()),
                ("des_k", des.to_string()),
                ("inv_k", inv_set.to_string()),
                ("maj_k", maj_k.to_string()),
                ("maj", t.maj().to_string()),
            ];
            if format == Format::Csv {
                rows[1].1 = rows[1].1.replace(',', " ");
                rows[3].1 = pair_set_csv(&des);
                rows[4].1 = pair_set_csv(&inv_set);
            }
            let payload = json!({
                "tableau": serde_json::to_value(&t).expect("tableau serializes"),
                "k": k,
                "experimental": experimental,
                "des_k": pair_set_json(&des),
                "inv_k": pair_set_json(&inv_set),
                "maj_k": maj_k,
                "maj": t.maj(),
            });
            print_rows(format, &rows, payload);
            Ok(ExitCode::SUCCESS)
        }
        Command::PhiTableau {
            tableau,
            k,
            experimental,
        } => {
            let t = parse_tableau(&tableau)?;
            let image = if experimental {
                if k < 2 {
                    return Err("the tableau transfer needs k >= 2".into());
                }
                tableau::experimental::phi(&t, k)
            } else {
                t.phi(k).map_err(|e| e.to_string())?
            };
            let rows = [
                ("tableau", t.to_string()),
                ("k", k.to_string()),
                ("image", image.to_string()),
            ];
            let payload = json!({
                "tableau": serde_json::to_value(&t).expect("tableau serializes"),
                "k": k,
                "experimental": experimental,
                "image": serde_json::to_value(&image).expect("tableau serializes"),
            });
            print_rows(format, &rows, payload);
            Ok(ExitCode::SUCCESS)
        }
        Command::Rsk { word } => {
            let w = parse_word(&word)?;
            let (p, q) = tableau::rsk(&w).map_err(|e| e.to_string())?;
            let rows = [
                ("word", w.to_string()),
                ("p", p.to_string()),
                ("q", q.to_string()),
            ];
            let payload = json!({
                "word": w.to_string(),
                "p": serde_json::to_value(&p).expect("tableau serializes"),
                "q": serde_json::to_value(&q).expect("tableau serializes"),
            });
            print_rows(format, &rows, payload);
            Ok(ExitCode::SUCCESS)
        }
        Command::Dist {
            multiset,
            spacers,
            shape,
            k,
            stat,
        } => {
            let (poly, context) = match (multiset, shape) {
                (Some(m), None) => {
                    let m: Multiset = m.parse().map_err(|e: kmaj::Error| e.to_string())?;
                    let mask = match spacers {
                        Some(s) => parse_positions(&s)?,
                        None => BTreeSet::new(),
                    };
                    let stat = match stat {
                        StatArg::Maj => Statistic::Maj,
                        StatArg::Inv => Statistic::Inv,
                        StatArg::Majk => {
                            if k < 1 {
                                return Err("k must be at least 1".into());
                            }
                            Statistic::MajK
                        }
                    };
                    let poly = distribution::word_distribution(&m, &mask, stat, k)
                        .map_err(|e| e.to_string())?;
                    let context = json!({
                        "multiset": m.to_string(),
                        "spacers": mask.iter().collect::<Vec<_>>(),
                        "k": k,
                    });
                    (poly, context)
                }
                (None, Some(s)) => {
                    let shape: Partition = s.parse().map_err(|e: kmaj::Error| e.to_string())?;
                    let poly =
                        distribution::syt_distribution(&shape, k).map_err(|e| e.to_string())?;
                    (poly, json!({ "shape": shape.to_string(), "k": k }))
                }
                _ => return Err("pass exactly one of --multiset or --shape".into()),
            };
            match format {
                Format::Text => println!("{poly}"),
                Format::Json => {
                    let mut payload = context;
                    payload["coeffs"] = serde_json::to_value(&poly).expect("polynomial serializes")
                        ["coeffs"]
                        .clone();
                    println!("{payload}");
                }
                Format::Csv => {
                    println!("power,coefficient");
                    for (p, c) in poly.coeffs().iter().enumerate() {
                        println!("{p},{c}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classes { n, k, spacers } => {
            if n < 1 || k < 1 {
                return Err("n and k must be at least 1".into());
            }
            let mask = match spacers {
                Some(s) => Some(parse_positions(&s)?),
                None => None,
            };
            let classes = equivalence::k_classes(n, k, mask.as_ref()).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    for (idx, class) in classes.iter().enumerate() {
                        let members: Vec<String> =
                            class.members.iter().map(Word::to_string).collect();
                        println!(
                            "class {idx}: {{{}}} des_k={} |inv_k|={}",
                            members.join(", "),
                            class.shared_des_k,
                            class.shared_inv_count
                        );
                    }
                }
                Format::Json => {
                    let payload = json!({
                        "k": k,
                        "classes": serde_json::to_value(&classes).expect("classes serialize"),
                    });
                    println!("{payload}");
                }
                Format::Csv => {
                    println!("class,member,des_k,inv_k");
                    for (idx, class) in classes.iter().enumerate() {
                        for member in &class.members {
                            println!(
                                "{idx},{member},{},{}",
                                pair_set_csv(&class.shared_des_k),
                                class.shared_inv_count
                            );
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_size } => {
            let report = verify::run_suite(&suite, max_size).map_err(|e| e.to_string())?;
            let verdict = if report.pass { "PASS" } else { "FAIL" };
            match format {
                Format::Csv => {
                    println!("suite,pass,checked,failures");
                    println!(
                        "{},{},{},{}",
                        report.suite, report.pass, report.checked, report.failure_count
                    );
                }
                _ => {
                    println!(
                        "suite {}: {verdict} ({} cases, {} failures)",
                        report.suite, report.checked, report.failure_count
                    );
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report).expect("report serializes")
                    );
                }
            }
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn word_image_output(format: Format, map: &str, w: &Word, k: usize, image: &Word) {
    let rows = [
        ("word", w.to_string()),
        ("k", k.to_string()),
        ("image", image.to_string()),
    ];
    let payload = json!({
        "map": map,
        "word": w.to_string(),
        "k": k,
        "image": image.to_string(),
    });
    print_rows(format, &rows, payload);
}
