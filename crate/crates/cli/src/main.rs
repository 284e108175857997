mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use cyclic_bounds::bounds::{self, BoundCertificate, BoundResult, SearchOptions, Variant};
use cyclic_bounds::decoder::{DecodeStatus, Decoder};
use cyclic_bounds::distance::{DistanceOracle, DEFAULT_BUDGET};
use cyclic_bounds::files::{CertificateFile, CodeSpecFile};
use cyclic_bounds::product::{self, ProductCode};
use cyclic_bounds::{arith, sweep, CyclicCode, DefiningSet, Poly};
use serde_json::Value;

use output::{Printer, Record};

/// Cyclic and cyclic product codes: minimum-distance bounds with
/// certificates, and decoding.
#[derive(Parser, Debug)]
#[command(name = "cb", version, about)]
struct Cli {
    /// Emit one JSON object per record instead of key=value text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact minimum distance by enumeration.
    Distance {
        code: PathBuf,
        /// Also print a minimum-weight codeword.
        #[arg(long)]
        word: bool,
    },
    /// Bound value and certificate for one code.
    Analyze {
        code: PathBuf,
        /// Associated code for the gen1/gen2 bounds.
        #[arg(long = "with")]
        with: Option<PathBuf>,
        /// Defaults to gen1 with --with and ht without.
        #[arg(long)]
        variant: Option<VariantArg>,
        /// Largest nu to try.
        #[arg(long)]
        max_nu: Option<u64>,
        /// Drop the nu + 1 <= delta - 1 restriction for gen1/gen2.
        #[arg(long)]
        no_nu_cap: bool,
        /// Write the certificate file here.
        #[arg(long)]
        write_cert: Option<PathBuf>,
    },
    /// Product code parameters and defining set.
    Product {
        code_a: PathBuf,
        code_b: PathBuf,
        /// Map (f1, f2, m1, m2) to the product exponents (f, m).
        #[arg(long, num_args = 4, value_names = ["F1", "F2", "M1", "M2"], allow_negative_numbers = true)]
        crt: Option<Vec<i64>>,
    },
    /// Scan a family of associated codes for the best generalized bound.
    Search {
        code: PathBuf,
        #[arg(long, value_enum, default_value = "spc")]
        b_family: Family,
        #[arg(long, default_value_t = 9)]
        max_nb: u64,
        #[arg(long)]
        write_cert: Option<PathBuf>,
    },
    /// Decode a received word with a certificate.
    Decode {
        code: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        /// Symbol list (`0,1,1,...` or space separated) or, for binary codes,
        /// hex with position 0 in the least significant bit (`0x...`).
        #[arg(long, allow_hyphen_values = true)]
        received: String,
        /// Print the syndrome matrix rank of every trial.
        #[arg(long)]
        audit_rank: bool,
        /// Codeword of the associated code to use instead of the default
        /// minimum-weight word.
        #[arg(long)]
        b_word: Option<String>,
        /// Load the certificate even if it fails verification.
        #[arg(long)]
        lax: bool,
    },
    /// Check every bound against the exact distance over a range of codes.
    Sweep {
        /// All binary cyclic codes (q = 2, odd lengths).
        #[arg(long, conflicts_with = "q")]
        all_binary: bool,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, default_value_t = 7)]
        min_n: u64,
        #[arg(long, default_value_t = 35)]
        max_n: u64,
        /// Largest single parity check associate length.
        #[arg(long, default_value_t = 9)]
        max_nb: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Bch,
    Ht,
    Gen1,
    Gen2,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Bch => Variant::Bch,
            VariantArg::Ht => Variant::Ht,
            VariantArg::Gen1 => Variant::Gen1,
            VariantArg::Gen2 => Variant::Gen2,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    /// Single parity check codes, d = 2.
    Spc,
    /// Repetition codes, d = n_b.
    Repetition,
}

enum Outcome {
    Ok,
    DecodeFailure,
    Violations,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = Printer { json: cli.json };
    match run(cli.command, &out) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::DecodeFailure) => ExitCode::from(2),
        Ok(Outcome::Violations) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn oracle() -> Result<DistanceOracle> {
    let budget = match std::env::var("CB_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("CB_BUDGET={v:?} is not a number"))?,
        Err(_) => DEFAULT_BUDGET,
    };
    Ok(DistanceOracle::new(budget))
}

fn read_code(path: &Path) -> Result<(CodeSpecFile, CyclicCode)> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut spec = CodeSpecFile::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    if spec.name.is_none() {
        spec.name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
    }
    let code = spec.to_code().with_context(|| format!("building {}", path.display()))?;
    Ok((spec, code))
}

fn run(command: Command, out: &Printer) -> Result<Outcome> {
    match command {
        Command::Distance { code, word } => distance(&code, word, out),
        Command::Analyze {
            code,
            with,
            variant,
            max_nu,
            no_nu_cap,
            write_cert,
        } => {
            let opts = SearchOptions {
                max_nu,
                cap_nu: no_nu_cap.then_some(false),
                ..SearchOptions::default()
            };
            analyze(
                &code,
                with.as_deref(),
                variant.map(Into::into),
                &opts,
                write_cert.as_deref(),
                out,
            )
        }
        Command::Product { code_a, code_b, crt } => product_cmd(&code_a, &code_b, crt.as_deref(), out),
        Command::Search {
            code,
            b_family,
            max_nb,
            write_cert,
        } => search(&code, b_family, max_nb, write_cert.as_deref(), out),
        Command::Decode {
            code,
            cert,
            received,
            audit_rank,
            b_word,
            lax,
        } => decode(&code, &cert, &received, audit_rank, b_word.as_deref(), lax, out),
        Command::Sweep {
            all_binary,
            q,
            min_n,
            max_n,
            max_nb,
        } => sweep_cmd(if all_binary { 2 } else { q }, min_n, max_n, max_nb, out),
    }
}

fn distance(path: &Path, word: bool, out: &Printer) -> Result<Outcome> {
    let (spec, code) = read_code(path)?;
    let oracle = oracle()?;
    let mut r = Record::line()
        .with("code", spec.display_name())
        .with("n", code.length())
        .with("k", code.dimension());
    if word {
        let w = oracle.min_weight_codeword(&code)?;
        r.push("d", w.weight());
        r.push("word", w.to_indices(code.length() as usize));
    } else {
        r.push("d", oracle.min_distance(&code)?);
    }
    out.emit(&r);
    Ok(Outcome::Ok)
}

fn certificate_record(name: &str, result: &BoundResult) -> Record {
    let mut r = Record::block().with("code", name).with("value", result.value);
    match &result.certificate {
        Some(c) => {
            for line in c.to_string().lines() {
                let (k, v) = line.split_once('=').expect("certificate lines are key=value");
                if k == "value" {
                    continue;
                }
                let v = v.parse::<i64>().map(Value::from).unwrap_or_else(|_| v.into());
                r.push(k, v);
            }
        }
        None => r.push("certificate", Value::Null),
    }
    r
}

fn write_certificate(path: &Path, cert: &BoundCertificate, a: &CodeSpecFile, b: Option<&CodeSpecFile>) -> Result<()> {
    let file = CertificateFile::new(cert.clone(), a, b);
    std::fs::write(path, file.to_toml()).with_context(|| format!("writing {}", path.display()))
}

fn analyze(
    path: &Path,
    with: Option<&Path>,
    variant: Option<Variant>,
    opts: &SearchOptions,
    write_cert: Option<&Path>,
    out: &Printer,
) -> Result<Outcome> {
    let (spec_a, a) = read_code(path)?;
    let b = with.map(read_code).transpose()?;
    let variant = variant.unwrap_or(if b.is_some() { Variant::Gen1 } else { Variant::Ht });
    let result = match (&b, variant) {
        (Some((_, b)), Variant::Gen1 | Variant::Gen2) => {
            let d_b = oracle()?.min_distance(b)?;
            bounds::generalized_bound(&a, b, d_b, variant, opts)?
        }
        (None, Variant::Gen1 | Variant::Gen2) => bail!("{variant} needs an associated code (--with)"),
        (Some(_), _) => bail!("{variant} takes no associated code"),
        (None, Variant::Bch) => bounds::bch_bound(a.defining_set()),
        (None, Variant::Ht) => bounds::ht_bound_with(a.defining_set(), opts),
    };
    out.emit(&certificate_record(&spec_a.display_name(), &result));
    if let Some(target) = write_cert {
        let cert = result
            .certificate
            .as_ref()
            .context("the bound is the trivial value 1; there is no certificate to write")?;
        write_certificate(target, cert, &spec_a, b.as_ref().map(|(s, _)| s))?;
    }
    Ok(Outcome::Ok)
}

fn product_cmd(pa: &Path, pb: &Path, crt: Option<&[i64]>, out: &Printer) -> Result<Outcome> {
    let (_, a) = read_code(pa)?;
    let (_, b) = read_code(pb)?;
    let p = ProductCode::new(&a, &b)?;
    let c = p.code();
    let (x, y) = p.bezout();
    let mut r = Record::block()
        .with("n", c.length())
        .with("k", c.dimension())
        .with("bezout", vec![x, y])
        .with("defining_set", p.defining_set().to_vec())
        .with("generator", p.generator().to_indices(p.defining_set().len() + 1));
    if let Some(&[f1, f2, m1, m2]) = crt {
        let (f, m) = product::crt_parameters(f1, f2, m1, m2, a.length(), b.length())?;
        r.push("f", f);
        r.push("m", m);
    }
    out.emit(&r);
    Ok(Outcome::Ok)
}

fn family_code(family: Family, q: u64, nb: u64) -> Result<CyclicCode> {
    Ok(match family {
        Family::Spc => sweep::single_parity_check(q, nb)?,
        Family::Repetition => CyclicCode::from_defining_set(q, nb, &DefiningSet::new(nb, 1..nb)?)?,
    })
}

fn search(path: &Path, family: Family, max_nb: u64, write_cert: Option<&Path>, out: &Printer) -> Result<Outcome> {
    let (spec_a, a) = read_code(path)?;
    let oracle = oracle()?;
    let opts = SearchOptions::default();
    let mut best: Option<(BoundResult, CodeSpecFile)> = None;
    for nb in 2..=max_nb {
        if arith::gcd(nb, a.length()) != 1 || arith::gcd(nb, a.q()) != 1 {
            continue;
        }
        let b = family_code(family, a.q(), nb)?;
        let d_b = oracle.min_distance(&b)?;
        let mut r = Record::line().with("n_b", nb).with("d_b", d_b);
        for v in [Variant::Gen1, Variant::Gen2] {
            let res = bounds::generalized_bound(&a, &b, d_b, v, &opts)?;
            r.push(v.name(), res.value);
            if best.as_ref().is_none_or(|(cur, _)| res.value > cur.value) {
                best = Some((
                    res,
                    CodeSpecFile::from_code(&b, Some(format!("{family:?}{nb}").to_lowercase())),
                ));
            }
        }
        out.emit(&r);
    }
    let Some((best, spec_b)) = best else {
        bail!(
            "no associated length in 2..={max_nb} is coprime to n = {} and q = {}",
            a.length(),
            a.q()
        );
    };
    out.emit(&certificate_record(&spec_a.display_name(), &best));
    if let Some(target) = write_cert {
        let cert = best
            .certificate
            .as_ref()
            .context("the best bound is the trivial value 1")?;
        write_certificate(target, cert, &spec_a, Some(&spec_b))?;
    }
    Ok(Outcome::Ok)
}

/// Parses a symbol list, or hex for binary codes.
fn parse_word(text: &str, code: &CyclicCode) -> Result<Poly> {
    let n = code.length() as usize;
    let text = text.trim();
    let symbols: Vec<u64> = if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
        ensure!(code.q() == 2, "hex input is only accepted for binary codes");
        let hex = hex.replace('_', "");
        ensure!(
            hex.len() * 4 <= n.div_ceil(4) * 4,
            "hex word is longer than n = {n} bits"
        );
        let bits = u128::from_str_radix(&hex, 16).context("malformed hex word")?;
        ensure!(
            n >= 128 || bits >> n == 0,
            "hex word has bits beyond position {}",
            n - 1
        );
        (0..n).map(|i| (bits >> i & 1) as u64).collect()
    } else {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u64>().with_context(|| format!("bad symbol {s:?}")))
            .collect::<Result<_>>()?
    };
    Ok(code.word(&symbols)?)
}

fn same_code(a: &CyclicCode, b: &CyclicCode) -> bool {
    a.q() == b.q() && a.length() == b.length() && a.defining_set() == b.defining_set()
}

fn decode(
    path: &Path,
    cert_path: &Path,
    received: &str,
    audit_rank: bool,
    b_word: Option<&str>,
    lax: bool,
    out: &Printer,
) -> Result<Outcome> {
    let (_, a) = read_code(path)?;
    let text = std::fs::read_to_string(cert_path).with_context(|| format!("reading {}", cert_path.display()))?;
    let loaded = CertificateFile::parse(&text)?.load(!lax)?;
    if let Some(w) = &loaded.warning {
        eprintln!("warning: certificate does not verify: {w}");
    }
    ensure!(
        same_code(&a, &loaded.code_a),
        "the certificate is for {} with defining set {:?}, not {}",
        loaded.code_a.label(),
        loaded.code_a.defining_set().to_vec(),
        a.label()
    );
    let b = loaded
        .code_b
        .as_ref()
        .context("decoding needs a gen1/gen2 certificate with an associated code")?;
    let decoder = match b_word {
        Some(w) => Decoder::with_associated_word(&a, b, &loaded.certificate, &parse_word(w, b)?)?,
        None => Decoder::new(&a, b, &loaded.certificate)?,
    };
    let r = parse_word(received, &a)?;
    let res = decoder.decode(&r);
    if audit_rank {
        for t in &res.trials {
            out.emit(
                &Record::line()
                    .with("trial", t.t)
                    .with("rank", t.rank)
                    .with("expected", decoder.certificate().d_b as usize * t.t)
                    .with("rejection", t.rejection.clone().map_or(Value::Null, Value::from)),
            );
        }
    }
    let n = a.length() as usize;
    let mut rec = Record::block().with("radius", decoder.radius());
    match res.status {
        DecodeStatus::Corrected => {
            rec.push("status", "corrected");
            rec.push("errors", res.positions.len());
            rec.push("positions", res.positions.clone());
            rec.push("values", res.values.clone());
            rec.push("corrected", res.corrected.clone().unwrap_or_default());
        }
        DecodeStatus::Failure => {
            rec.push("status", "failure");
            rec.push(
                "reason",
                res.failure.as_ref().map_or(Value::Null, |e| e.to_string().into()),
            );
            rec.push("received", r.to_indices(n));
        }
    }
    out.emit(&rec);
    Ok(match res.status {
        DecodeStatus::Corrected => Outcome::Ok,
        DecodeStatus::Failure => Outcome::DecodeFailure,
    })
}

fn sweep_cmd(q: u64, min_n: u64, max_n: u64, max_nb: u64, out: &Printer) -> Result<Outcome> {
    let oracle = oracle()?;
    let codes = sweep::codes_in_range(q, min_n, max_n, q == 2)?;
    let mut violations = 0;
    for result in sweep::sweep(&codes, max_nb, &oracle) {
        let r = result?;
        let bad = r.violations();
        violations += bad.len();
        let mut rec = Record::line()
            .with("n", r.n)
            .with("k", r.k)
            .with("defining_set", r.defining_set.clone())
            .with("d", r.d)
            .with("bch", r.bch)
            .with("ht", r.ht)
            .with("n_b", r.associates.iter().map(|x| x.n_b).collect::<Vec<_>>())
            .with("gen1", r.associates.iter().map(|x| x.gen1).collect::<Vec<_>>())
            .with("gen2", r.associates.iter().map(|x| x.gen2).collect::<Vec<_>>());
        if !bad.is_empty() {
            rec.push("violations", bad);
        }
        out.emit(&rec);
    }
    out.emit(&Record::line().with("codes", codes.len()).with("violations", violations));
    Ok(if violations == 0 {
        Outcome::Ok
    } else {
        Outcome::Violations
    })
}
