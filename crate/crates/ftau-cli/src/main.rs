//! `ftau` — batch queries against the golden-ratio Thompson group kernel.
//!
//! Every command is a thin adapter over the library: arguments are validated,
//! the kernel is called once, and the result is printed in the requested
//! format. Output is deterministic byte for byte. Exit codes: 0 success,
//! 1 user error (parse or domain), 2 rewriting step limit exhausted.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ftau::characters::{parse_rational, Character};
use ftau::golden::GoldenInt;
use ftau::normal::{normalize, to_normal_form_data};
use ftau::pl::PlHomeo;
use ftau::sigma::{kernel_coabelian_type, kernel_witness, verdict};
use ftau::subgroups::{hnn_reduce, hnn_rewrite, in_ftau_m, in_k, HnnForm, Membership};
use ftau::words::{abelianize, coset_of, lambda_of, rho_of, Word};

#[derive(Parser)]
#[command(name = "ftau", version, about = "Exact computations in the golden-ratio Thompson group")]
struct Cli {
    /// Rewriting step budget for normal-form computations.
    #[arg(long, global = true, default_value_t = 100_000)]
    step_limit: u64,

    /// Output format. `tsv` is only meaningful for `plot-data`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest generator index accepted in input words.
    #[arg(long, global = true, default_value_t = 64)]
    max_index: u32,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the map of WORD at a point of [0, 1] given as `a+bt`.
    Eval { word: String, point: String },
    /// Concatenate WORDs and print the resulting map piece by piece.
    Compose {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Rewrite WORD to its unique normal form.
    Normalize { word: String },
    /// Check whether WORD is literally in normal form.
    NfCheck { word: String },
    /// Evaluate the character A*lambda + B*rho on WORD (A, B rational).
    Char {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        word: String,
    },
    /// Image of WORD in the abelianization, basis (y0-bar, x1-bar, z).
    Abel { word: String },
    /// Sigma-invariant membership for the class of A*lambda + B*rho.
    Sigma {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Finiteness type of the kernel of A*lambda + B*rho.
    KernelType {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// A kernel element of A*lambda + B*rho with minimal nonzero |lambda|.
    Witness {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Which coset of the index-two subgroup K the WORD lies in.
    Coset { word: String },
    /// HNN shape x0^a core x0^-b of WORD, raw and Britton-reduced.
    Hnn { word: String },
    /// Membership of WORD in K (TARGET `K`) or in the copy generated by
    /// indices >= m (TARGET an integer m >= 1).
    Member { word: String, target: String },
    /// Print a generator map: FAMILY is `x` or `y`.
    Gen { family: String, index: u32 },
    /// Sample the graph of WORD's map: breakpoints plus golden-ratio
    /// subdivisions, as exact values and 30-digit decimals.
    PlotData { word: String },
}

enum Failure {
    User(String),
    StepLimit(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::User(_) => 1,
            Failure::StepLimit(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::User(m) | Failure::StepLimit(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if cli.format == Format::Tsv && !matches!(cli.command, Cmd::PlotData { .. }) {
        return Err(Failure::User("tsv output is only available for plot-data".into()));
    }
    match &cli.command {
        Cmd::Eval { word, point } => {
            let word = parse_word(cli, word)?;
            let x: GoldenInt =
                point.parse().map_err(|e| Failure::User(format!("point: {e}")))?;
            let fx = word.eval().eval(&x).map_err(|e| Failure::User(e.to_string()))?;
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.eval/1",
                    "word": word.to_string(),
                    "x": golden_json(&x),
                    "fx": golden_json(&fx),
                })),
                _ => fx.to_string(),
            })
        }
        Cmd::Compose { words } => {
            let mut combined = Word::empty();
            for text in words {
                combined = combined.concat(&parse_word(cli, text)?);
            }
            let map = combined.eval();
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.plhomeo/1",
                    "word": combined.to_string(),
                    "pieces": pieces_json(&map),
                })),
                _ => format!("{map}").trim_end().to_string(),
            })
        }
        Cmd::Normalize { word } => {
            let word = parse_word(cli, word)?;
            let nf = normalize(&word, cli.step_limit)
                .map_err(|e| Failure::StepLimit(e.to_string()))?;
            Ok(match cli.format {
                Format::Json => {
                    let data = to_normal_form_data(&nf).expect("normalize output is normal");
                    pretty(&json!({
                        "schema": "ftau.normalize/1",
                        "input": word.to_string(),
                        "word": nf.to_string(),
                        "normal_form": normal_form_json(&data),
                    }))
                }
                _ => nf.to_string(),
            })
        }
        Cmd::NfCheck { word } => {
            let word = parse_word(cli, word)?;
            let outcome = to_normal_form_data(&word);
            Ok(match cli.format {
                Format::Json => match outcome {
                    Ok(data) => pretty(&json!({
                        "schema": "ftau.nf-check/1",
                        "word": word.to_string(),
                        "normal": true,
                        "normal_form": normal_form_json(&data),
                    })),
                    Err(e) => pretty(&json!({
                        "schema": "ftau.nf-check/1",
                        "word": word.to_string(),
                        "normal": false,
                        "reason": e.to_string(),
                    })),
                },
                _ => match outcome {
                    Ok(_) => "normal".to_string(),
                    Err(e) => format!("not normal: {e}"),
                },
            })
        }
        Cmd::Char { a, b, word } => {
            let chi = parse_character(a, b)?;
            let word = parse_word(cli, word)?;
            let value = chi.eval(&word);
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.char/1",
                    "a": chi.lambda_coeff().to_string(),
                    "b": chi.rho_coeff().to_string(),
                    "word": word.to_string(),
                    "value": value.to_string(),
                })),
                _ => value.to_string(),
            })
        }
        Cmd::Abel { word } => {
            let word = parse_word(cli, word)?;
            let image = abelianize(&word);
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.abel/1",
                    "word": word.to_string(),
                    "u": image.u,
                    "v": image.v,
                    "z": image.z as u8,
                })),
                _ => format!("({}, {}, {})", image.u, image.v, image.z as u8),
            })
        }
        Cmd::Sigma { a, b } => {
            let chi = parse_character(a, b)?;
            let class = chi.class().map_err(|e| Failure::User(e.to_string()))?;
            let v = verdict(&class);
            let in_out = |flag: bool| if flag { "in" } else { "out" };
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.sigma/1",
                    "class": [class.lambda_coeff().to_string(), class.rho_coeff().to_string()],
                    "sigma1": v.in_sigma1,
                    "sigma_infty": v.in_sigma_infty,
                })),
                _ => format!("Sigma1: {}; Sigma_infty: {}", in_out(v.in_sigma1), in_out(v.in_sigma_infty)),
            })
        }
        Cmd::KernelType { a, b } => {
            let chi = parse_character(a, b)?;
            let kind = kernel_coabelian_type(&chi).map_err(|e| Failure::User(e.to_string()))?;
            Ok(match cli.format {
                Format::Json => {
                    let class = chi.class().expect("nonzero");
                    pretty(&json!({
                        "schema": "ftau.kernel-type/1",
                        "class": [class.lambda_coeff().to_string(), class.rho_coeff().to_string()],
                        "kernel_type": kind.to_string(),
                    }))
                }
                _ => kind.to_string(),
            })
        }
        Cmd::Witness { a, b } => {
            let chi = parse_character(a, b)?;
            let t0 = kernel_witness(&chi).map_err(|e| Failure::User(e.to_string()))?;
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.witness/1",
                    "word": t0.to_string(),
                    "lambda": lambda_of(&t0),
                    "rho": rho_of(&t0),
                    "chi_value": chi.eval(&t0).to_string(),
                })),
                _ => t0.to_string(),
            })
        }
        Cmd::Coset { word } => {
            let word = parse_word(cli, word)?;
            let coset = coset_of(&word);
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.coset/1",
                    "word": word.to_string(),
                    "coset": coset.to_string(),
                    "in_k": in_k(&word),
                })),
                _ => coset.to_string(),
            })
        }
        Cmd::Hnn { word } => {
            let word = parse_word(cli, word)?;
            let raw = hnn_rewrite(&word).map_err(|e| Failure::User(e.to_string()))?;
            let reduced =
                hnn_reduce(&raw, cli.step_limit).map_err(|e| Failure::StepLimit(e.to_string()))?;
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.hnn/1",
                    "word": word.to_string(),
                    "rewrite": hnn_json(&raw),
                    "reduced": hnn_json(&reduced),
                })),
                _ => format!("rewrite: {raw}\nreduced: {reduced}"),
            })
        }
        Cmd::Member { word, target } => {
            let word = parse_word(cli, word)?;
            let (subgroup, membership) = if target == "K" {
                ("K".to_string(), if in_k(&word) { Membership::In } else { Membership::NotIn })
            } else {
                let m: u32 = target.parse().map_err(|_| {
                    Failure::User(format!("target must be \"K\" or a positive integer, got {target:?}"))
                })?;
                if m == 0 {
                    return Err(Failure::User("subgroup level must be at least 1".into()));
                }
                (format!("F_tau[{m}]"), in_ftau_m(&word, m, cli.step_limit))
            };
            let output = match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.member/1",
                    "word": word.to_string(),
                    "subgroup": subgroup,
                    "membership": membership.to_string(),
                })),
                _ => membership.to_string(),
            };
            if membership == Membership::Unknown {
                // Surface the verdict, but report the exhausted budget in the
                // exit code as for every other step-limited command.
                println!("{output}");
                return Err(Failure::StepLimit("step limit exhausted; membership unknown".into()));
            }
            Ok(output)
        }
        Cmd::Gen { family, index } => {
            if *index > cli.max_index {
                return Err(Failure::User(format!(
                    "index {index} exceeds --max-index {}",
                    cli.max_index
                )));
            }
            let map = match family.as_str() {
                "x" => PlHomeo::generator_x(*index),
                "y" => PlHomeo::generator_y(*index),
                other => return Err(Failure::User(format!("family must be 'x' or 'y', got {other:?}"))),
            };
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.plhomeo/1",
                    "word": format!("{family}{index}"),
                    "pieces": pieces_json(&map),
                })),
                _ => format!("{map}").trim_end().to_string(),
            })
        }
        Cmd::PlotData { word } => {
            let word = parse_word(cli, word)?;
            let map = word.eval();
            let rows = plot_rows(&map);
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "schema": "ftau.plot-data/1",
                    "word": word.to_string(),
                    "rows": rows
                        .iter()
                        .map(|(x, fx)| {
                            json!({
                                "x": x.to_string(),
                                "x_decimal": x.approx(30),
                                "fx": fx.to_string(),
                                "fx_decimal": fx.approx(30),
                            })
                        })
                        .collect::<Vec<_>>(),
                })),
                _ => {
                    let mut out = String::from("x\tx_decimal\tfx\tfx_decimal");
                    for (x, fx) in &rows {
                        out.push_str(&format!(
                            "\n{}\t{}\t{}\t{}",
                            x,
                            x.approx(30),
                            fx,
                            fx.approx(30)
                        ));
                    }
                    out
                }
            })
        }
    }
}

fn parse_word(cli: &Cli, text: &str) -> Result<Word, Failure> {
    let word = Word::parse(text).map_err(|e| Failure::User(e.to_string()))?;
    if let Some(max) = word.max_index() {
        if max > cli.max_index {
            return Err(Failure::User(format!(
                "generator index {max} exceeds --max-index {}",
                cli.max_index
            )));
        }
    }
    Ok(word)
}

fn parse_character(a: &str, b: &str) -> Result<Character, Failure> {
    let a = parse_rational(a).map_err(|e| Failure::User(e.to_string()))?;
    let b = parse_rational(b).map_err(|e| Failure::User(e.to_string()))?;
    Ok(Character::new(a, b))
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

/// A golden integer in JSON: the coordinate pair as decimal strings (the
/// coordinates are unbounded integers) plus the grammar rendering.
fn golden_json(x: &GoldenInt) -> serde_json::Value {
    json!({
        "coeffs": [x.coeff_one().to_string(), x.coeff_tau().to_string()],
        "text": x.to_string(),
    })
}

fn pieces_json(map: &PlHomeo) -> serde_json::Value {
    json!(map
        .pieces()
        .iter()
        .map(|p| {
            json!({
                "left": [p.left().coeff_one().to_string(), p.left().coeff_tau().to_string()],
                "value": [p.value_at_left().coeff_one().to_string(), p.value_at_left().coeff_tau().to_string()],
                "slope_exp": p.slope_exp(),
            })
        })
        .collect::<Vec<_>>())
}

fn normal_form_json(data: &ftau::NormalForm) -> serde_json::Value {
    let mut positive = Vec::new();
    if let Some(n) = data.max_positive_index() {
        for k in 0..=n {
            if data.x_exp(k) != 0 || data.y_flag(k) {
                positive.push(json!([k, data.x_exp(k), data.y_flag(k) as u8]));
            }
        }
    }
    let mut negative = Vec::new();
    if let Some(m) = data.max_negative_index() {
        for k in (0..=m).rev() {
            if data.neg_exp(k) != 0 {
                negative.push(json!([k, data.neg_exp(k)]));
            }
        }
    }
    json!({ "positive": positive, "negative": negative })
}

fn hnn_json(h: &HnnForm) -> serde_json::Value {
    json!({
        "a": h.leading_exp(),
        "core": h.core().to_string(),
        "b": h.trailing_exp(),
    })
}

/// Sample points: all breakpoints, the right endpoint, and a depth-three
/// golden subdivision of each piece (the golden cut keeps every sample inside
/// `Z[tau]`, the analogue of dyadic refinement for this slope group).
fn plot_rows(map: &PlHomeo) -> Vec<(GoldenInt, GoldenInt)> {
    let mut xs: Vec<GoldenInt> = Vec::new();
    let mut bounds: Vec<GoldenInt> = map.pieces().iter().map(|p| p.left().clone()).collect();
    bounds.push(GoldenInt::one());
    for pair in bounds.windows(2) {
        xs.push(pair[0].clone());
        golden_subdivide(&pair[0], &pair[1], 3, &mut xs);
    }
    xs.push(GoldenInt::one());
    xs.iter()
        .map(|x| (x.clone(), map.eval(x).expect("sample points lie in [0, 1]")))
        .collect()
}

fn golden_subdivide(left: &GoldenInt, right: &GoldenInt, depth: u32, out: &mut Vec<GoldenInt>) {
    if depth == 0 {
        return;
    }
    let mid = left + &(right - left).mul_tau_pow(1);
    golden_subdivide(left, &mid, depth - 1, out);
    out.push(mid.clone());
    golden_subdivide(&mid, right, depth - 1, out);
}
