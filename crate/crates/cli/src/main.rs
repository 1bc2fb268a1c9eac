//! Command-line front end for the vanishing-theorem toolkit.
//!
//! Every subcommand prints a human-readable summary by default and exactly
//! one machine-readable JSON record with `--json` (deterministic field
//! order, arbitrary-precision dimensions as decimal strings). Exit codes:
//! 0 success, 1 usage/configuration error, 2 domain error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use dolbeault_core::bott::{
    bott_cohomology, pm_forms_cohomology, serre_dual_input, BottInput, BottResult,
};
use dolbeault_core::harness::{optimality_reproduce, sweep_validate, SweepBox, SweepCase};
use dolbeault_core::partitions::{delta, dominance_compare, IntPartition};
use dolbeault_core::schur::{
    lr_decompose, relative_forms_decompose, sym_wedge_decompose, tensor_power_decompose, weyl_dim,
    SchurDecomposition, WeightVector,
};
use dolbeault_core::spectral::{
    capital_q, dm_targets, e1_term, identity_residuals, SpectralCell, SpectralParams,
};
use dolbeault_core::vanishing::{
    vanish_hook, vanish_main, vanish_nagoya, vanish_sym, vanish_sym_wedge_corollary, vanish_wedge,
    VanishingVerdict,
};
use dolbeault_core::Error as CoreError;

#[derive(Parser)]
#[command(
    name = "dolbeault",
    version,
    about = "Exact index calculus behind Dolbeault vanishing theorems: partitions, \
             Littlewood–Richardson and Bott computations, vanishing predicates, spectral \
             bookkeeping, and a split-bundle cross-validation sweep"
)]
struct Cli {
    /// Emit one machine-readable JSON record on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// Comma-separated non-negative integers; `[]` is the empty list.
#[derive(Clone, Debug)]
struct U64List(Vec<u64>);

/// Comma-separated integers; `[]` is the empty list.
#[derive(Clone, Debug)]
struct I64List(Vec<i64>);

/// Comma-separated `r:e` pairs; `[]` is the empty list.
#[derive(Clone, Debug)]
struct FactorList(Vec<(u64, u64)>);

fn parse_u64_list(s: &str) -> Result<U64List, String> {
    if s == "[]" {
        return Ok(U64List(Vec::new()));
    }
    s.split(',')
        .map(|t| {
            t.parse::<u64>()
                .map_err(|e| format!("invalid entry {t:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(U64List)
}

fn parse_i64_list(s: &str) -> Result<I64List, String> {
    if s == "[]" {
        return Ok(I64List(Vec::new()));
    }
    s.split(',')
        .map(|t| {
            t.parse::<i64>()
                .map_err(|e| format!("invalid entry {t:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(I64List)
}

fn parse_factor_list(s: &str) -> Result<FactorList, String> {
    if s == "[]" {
        return Ok(FactorList(Vec::new()));
    }
    s.split(',')
        .map(|t| {
            let (r, e) = t
                .split_once(':')
                .ok_or_else(|| format!("invalid factor {t:?}: expected r:e"))?;
            Ok((
                r.parse::<u64>()
                    .map_err(|e| format!("invalid rank in {t:?}: {e}"))?,
                e.parse::<u64>()
                    .map_err(|e| format!("invalid rank in {t:?}: {e}"))?,
            ))
        })
        .collect::<Result<_, _>>()
        .map(FactorList)
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Evaluate the staircase function delta(x).
    Delta {
        #[arg(long, allow_negative_numbers = true)]
        x: i64,
    },
    /// Compare two partitions in the cross-scaled dominance pre-order.
    Dominance {
        #[arg(long, value_parser = parse_u64_list)]
        u: U64List,
        #[arg(long, value_parser = parse_u64_list)]
        v: U64List,
    },
    /// Littlewood–Richardson decomposition of S_u ⊗ S_v.
    Lr {
        #[arg(long, value_parser = parse_u64_list)]
        u: U64List,
        #[arg(long, value_parser = parse_u64_list)]
        v: U64List,
    },
    /// Schur-functor decompositions and module dimensions.
    Decompose {
        #[command(subcommand)]
        kind: Decompose,
    },
    /// Bott cohomology of S_a Q ⊗ S_b S on Gr(r, d).
    Bott {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, value_parser = parse_i64_list, allow_hyphen_values = true)]
        a: I64List,
        #[arg(long, value_parser = parse_i64_list, allow_hyphen_values = true)]
        b: I64List,
        /// Compute on the Serre-dual input instead.
        #[arg(long)]
        dual: bool,
    },
    /// Cohomology of the twisted p-forms Ω^p(t) on projective m-space.
    PmForms {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        p: u64,
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
    },
    /// Vanishing predicates for H^{p,q}.
    Vanish {
        #[command(subcommand)]
        mode: Vanish,
    },
    /// First-page spectral cells: one base degree p, or the whole grid.
    E1 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        l: u64,
        /// Total form degree on the Grassmann bundle.
        #[arg(long = "P")]
        big_p: u64,
        /// Optional cross-check: must equal l·r.
        #[arg(long)]
        k: Option<u64>,
        /// Base degree; omit to print the whole grid 0..=n.
        #[arg(long, allow_negative_numbers = true)]
        p: Option<i64>,
    },
    /// Connecting-morphism targets on page μr.
    Dm {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        mu: u64,
    },
    /// The survival bound Q(x, α) = x + (δ(x)+α)(e−k+2α) − α(α+1).
    Qbound {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        alpha: u64,
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Residuals of the telescoping identities (must be zero).
    Identities {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        mu: u64,
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Replay the sharpness boundary example on Gr(r, f+r).
    Optimality {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        f: u64,
    },
    /// Cross-validate every predicate against the split-bundle oracle.
    Sweep(SweepArgs),
}

#[derive(Subcommand)]
enum Decompose {
    /// S^α ⊗ ∧^β as at most two hook functors.
    SymWedge {
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        beta: u64,
    },
    /// Full decomposition of the α-fold tensor power of the standard module.
    TensorPower {
        #[arg(long)]
        alpha: u64,
    },
    /// Dimension of the irreducible GL(d) module with highest weight λ.
    WeylDim {
        #[arg(long, value_parser = parse_i64_list, allow_hyphen_values = true)]
        lambda: I64List,
        #[arg(long)]
        d: u64,
    },
    /// Exterior powers of the relative cotangent bundle of a Grassmann
    /// bundle, as S_u Q* ⊗ ∧_u S terms.
    RelativeForms {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
    },
}

#[derive(Subcommand)]
enum Vanish {
    /// Hybrid bound for S^α E ⊗ ∧^β E ⊗ L with the r0 refinement.
    Main {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        beta: u64,
    },
    /// The same bound for the hook functor Γ^{α,k} (β = k−α).
    Hook {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        k: u64,
    },
    /// Pure exterior power ∧^β E ⊗ L.
    Wedge {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        beta: u64,
    },
    /// Pure symmetric power S^α E ⊗ L.
    Sym {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        alpha: u64,
    },
    /// Multi-factor exterior product ∧^{r_1}E_1 ⊗ ⋯ ⊗ L, factors as r:e pairs.
    Nagoya {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_parser = parse_factor_list)]
        factors: FactorList,
    },
    /// Unrefined hybrid bound α(e−1) + β(e−β).
    Corollary {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        beta: u64,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// TOML file with box ranges (keys m_min, m_max, e_min, e_max,
    /// degree_min, degree_max, c_min, c_max, alpha_min, alpha_max,
    /// beta_min, beta_max, weight_max, p_min, p_max, q_min, q_max).
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    m_min: Option<u64>,
    #[arg(long)]
    m_max: Option<u64>,
    #[arg(long)]
    e_min: Option<u64>,
    #[arg(long)]
    e_max: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    degree_min: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    degree_max: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    c_min: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    c_max: Option<i64>,
    #[arg(long)]
    alpha_min: Option<u64>,
    #[arg(long)]
    alpha_max: Option<u64>,
    #[arg(long)]
    beta_min: Option<u64>,
    #[arg(long)]
    beta_max: Option<u64>,
    #[arg(long)]
    weight_max: Option<u64>,
    #[arg(long)]
    p_min: Option<u64>,
    #[arg(long)]
    p_max: Option<u64>,
    #[arg(long)]
    q_min: Option<u64>,
    #[arg(long)]
    q_max: Option<u64>,
}

/// Sweep box ranges as read from a TOML config file; every key optional.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct SweepConfig {
    m_min: Option<u64>,
    m_max: Option<u64>,
    e_min: Option<u64>,
    e_max: Option<u64>,
    degree_min: Option<i64>,
    degree_max: Option<i64>,
    c_min: Option<i64>,
    c_max: Option<i64>,
    alpha_min: Option<u64>,
    alpha_max: Option<u64>,
    beta_min: Option<u64>,
    beta_max: Option<u64>,
    weight_max: Option<u64>,
    p_min: Option<u64>,
    p_max: Option<u64>,
    q_min: Option<u64>,
    q_max: Option<u64>,
}

enum Failure {
    /// Well-formed request outside an operation's domain (exit 2).
    Domain(CoreError),
    /// Unusable invocation or configuration (exit 1).
    Config(String),
}

impl From<CoreError> for Failure {
    fn from(err: CoreError) -> Self {
        Failure::Domain(err)
    }
}

fn domain(msg: String) -> Failure {
    Failure::Domain(CoreError::Domain(msg))
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if err.use_stderr() {
                eprint!("{err}");
                std::process::exit(1);
            }
            // --help / --version
            let _ = err.print();
            std::process::exit(0);
        }
    };
    match run(&cli) {
        Ok((record, text)) => {
            if cli.json {
                println!("{record}");
            } else {
                println!("{text}");
            }
        }
        Err(Failure::Domain(err)) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}

fn run(cli: &Cli) -> Result<(Value, String), Failure> {
    match &cli.command {
        Command::Delta { x } => {
            let x = u64::try_from(*x)
                .map_err(|_| domain(format!("delta is defined for x >= 0, got {x}")))?;
            let d = delta(x);
            Ok((json!({ "delta": d }), format!("delta({x}) = {d}")))
        }

        Command::Dominance { u, v } => {
            let u = IntPartition::new(u.0.clone())?;
            let v = IntPartition::new(v.0.clone())?;
            let rel = dominance_compare(&u, &v)?;
            let record = json!({
                "relation": rel.to_string(),
                "greater_eq": rel.greater_eq(),
                "less_eq": rel.less_eq(),
            });
            let text = format!(
                "{u} vs {v}: {rel} (greater-eq: {}, less-eq: {})",
                rel.greater_eq(),
                rel.less_eq()
            );
            Ok((record, text))
        }

        Command::Lr { u, v } => {
            let u = IntPartition::new(u.0.clone())?;
            let v = IntPartition::new(v.0.clone())?;
            let dec = lr_decompose(&u, &v);
            Ok((terms_record(&dec), format!("{u} ⊗ {v} = {dec}")))
        }

        Command::Decompose { kind } => run_decompose(kind),

        Command::Bott { r, d, a, b, dual } => {
            if a.0.len() as u64 != *r {
                return Err(domain(format!(
                    "a has {} entries but the quotient rank r is {r}",
                    a.0.len()
                )));
            }
            if (a.0.len() + b.0.len()) as u64 != *d {
                return Err(domain(format!(
                    "a and b have {} entries together but d is {d}",
                    a.0.len() + b.0.len()
                )));
            }
            let input = BottInput::new(
                WeightVector::new(a.0.clone())?,
                WeightVector::new(b.0.clone())?,
            )?;
            let input = if *dual {
                serre_dual_input(&input)
            } else {
                input
            };
            let result = bott_cohomology(&input);
            let text = match &result {
                BottResult::Zero => "all cohomology vanishes".to_string(),
                BottResult::NonZero { degree, psi, dim } => {
                    format!("H^{degree} is the irreducible module of weight {psi}, dim {dim}")
                }
            };
            Ok((bott_record(&result), text))
        }

        Command::PmForms { m, p, t } => {
            let coh = pm_forms_cohomology(*m, *p, *t)?;
            Ok((cohomology_record(&coh), cohomology_text(&coh)))
        }

        Command::Vanish { mode } => {
            let verdict = match mode {
                Vanish::Main {
                    n,
                    p,
                    q,
                    e,
                    alpha,
                    beta,
                } => vanish_main(*n, *p, *q, *e, *alpha, *beta)?,
                Vanish::Hook {
                    n,
                    p,
                    q,
                    e,
                    alpha,
                    k,
                } => vanish_hook(*n, *p, *q, *e, *alpha, *k)?,
                Vanish::Wedge { n, p, q, e, beta } => vanish_wedge(*n, *p, *q, *e, *beta)?,
                Vanish::Sym { n, p, q, e, alpha } => vanish_sym(*n, *p, *q, *e, *alpha)?,
                Vanish::Nagoya { n, p, q, factors } => vanish_nagoya(*n, *p, *q, &factors.0)?,
                Vanish::Corollary {
                    n,
                    p,
                    q,
                    e,
                    alpha,
                    beta,
                } => vanish_sym_wedge_corollary(*n, *p, *q, *e, *alpha, *beta)?,
            };
            Ok((verdict_record(&verdict), verdict_text(&verdict)))
        }

        Command::E1 {
            n,
            e,
            r,
            l,
            big_p,
            k,
            p,
        } => {
            let params = SpectralParams::new(*n, *e, *r, *l, *big_p)?;
            if let Some(k) = k {
                if *k != params.k() {
                    return Err(domain(format!(
                        "k must equal l·r = {}, got k={k}",
                        params.k()
                    )));
                }
            }
            match p {
                Some(p) => {
                    let cell = e1_term(&params, *p);
                    Ok((cell_record(*p, &cell), cell_text(*p, &cell)))
                }
                None => {
                    let cells: Vec<(i64, SpectralCell)> =
                        (0..=*n as i64).map(|p| (p, e1_term(&params, p))).collect();
                    let record = json!({
                        "cells": cells.iter().map(|(p, c)| cell_record(*p, c)).collect::<Vec<_>>(),
                    });
                    let mut text = String::new();
                    for (i, (p, c)) in cells.iter().enumerate() {
                        if i > 0 {
                            text.push('\n');
                        }
                        let _ = write!(text, "{}", cell_text(*p, c));
                    }
                    Ok((record, text))
                }
            }
        }

        Command::Dm { p, q, r, mu } => {
            let t = dm_targets(*p, *q, *r, *mu)?;
            let record = json!({
                "right": {"p": t.right.0, "q": t.right.1},
                "left": {"p": t.left.0, "q": t.left.1},
            });
            let text = format!(
                "right: ({}, {}), left: ({}, {})",
                t.right.0, t.right.1, t.left.0, t.left.1
            );
            Ok((record, text))
        }

        Command::Qbound { x, alpha, e, k } => {
            let value = capital_q(*x, *alpha, *e, *k);
            Ok((json!({ "Q": value }), format!("Q({x}, {alpha}) = {value}")))
        }

        Command::Identities { x, alpha, mu, e, k } => {
            let res = identity_residuals(*x, *alpha, *mu, *e, *k)?;
            let mut map = Map::new();
            if let Some(r6) = res.res6 {
                map.insert("res6".into(), r6.into());
            }
            if let Some(r7) = res.res7 {
                map.insert("res7".into(), r7.into());
            }
            let fmt = |r: Option<i64>| r.map_or("absent".to_string(), |v| v.to_string());
            let text = format!("res6 = {}, res7 = {}", fmt(res.res6), fmt(res.res7));
            Ok((Value::Object(map), text))
        }

        Command::Optimality { r, f } => {
            let rep = optimality_reproduce(*r, *f)?;
            let record = json!({
                "bott_degree": rep.bott_degree,
                "bott_dim": rep.bott_dim.to_string(),
                "verdict_excess": rep.verdict_excess,
            });
            let text = format!(
                "Bott cohomology in degree {} with dimension {}; vanishing excess {}",
                rep.bott_degree, rep.bott_dim, rep.verdict_excess
            );
            Ok((record, text))
        }

        Command::Sweep(args) => run_sweep(args),
    }
}

fn run_decompose(kind: &Decompose) -> Result<(Value, String), Failure> {
    match kind {
        Decompose::SymWedge { alpha, beta } => {
            let dec = sym_wedge_decompose(*alpha, *beta)?;
            Ok((terms_record(&dec), format!("S^{alpha} ⊗ ∧^{beta} = {dec}")))
        }
        Decompose::TensorPower { alpha } => {
            let dec = tensor_power_decompose(*alpha)?;
            Ok((terms_record(&dec), format!("V^⊗{alpha} = {dec}")))
        }
        Decompose::WeylDim { lambda, d } => {
            let weight = WeightVector::new(lambda.0.clone())?;
            let d = usize::try_from(*d).map_err(|_| domain(format!("d={d} is out of range")))?;
            let dim = weyl_dim(&weight, d)?;
            Ok((json!({ "dim": dim.to_string() }), format!("dim = {dim}")))
        }
        Decompose::RelativeForms { m, r, s } => {
            let terms = relative_forms_decompose(*m, *r, *s)?;
            let record = json!({
                "terms": terms
                    .iter()
                    .map(|t| json!({
                        "u": t.shape().parts(),
                        "conjugate": t.conjugate().parts(),
                    }))
                    .collect::<Vec<_>>(),
            });
            let text = if terms.is_empty() {
                "0".to_string()
            } else {
                terms
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(" ⊕ ")
            };
            Ok((record, text))
        }
    }
}

fn run_sweep(args: &SweepArgs) -> Result<(Value, String), Failure> {
    let mut cfg = SweepConfig::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Config(format!("cannot read {}: {e}", path.display())))?;
        cfg = toml::from_str(&text)
            .map_err(|e| Failure::Config(format!("invalid sweep config: {e}")))?;
    }

    let mut boxx = SweepBox::default();
    boxx.m.0 = args.m_min.or(cfg.m_min).unwrap_or(boxx.m.0);
    boxx.m.1 = args.m_max.or(cfg.m_max).unwrap_or(boxx.m.1);
    boxx.e.0 = args.e_min.or(cfg.e_min).unwrap_or(boxx.e.0);
    boxx.e.1 = args.e_max.or(cfg.e_max).unwrap_or(boxx.e.1);
    boxx.degree.0 = args.degree_min.or(cfg.degree_min).unwrap_or(boxx.degree.0);
    boxx.degree.1 = args.degree_max.or(cfg.degree_max).unwrap_or(boxx.degree.1);
    boxx.c.0 = args.c_min.or(cfg.c_min).unwrap_or(boxx.c.0);
    boxx.c.1 = args.c_max.or(cfg.c_max).unwrap_or(boxx.c.1);
    boxx.alpha.0 = args.alpha_min.or(cfg.alpha_min).unwrap_or(boxx.alpha.0);
    boxx.alpha.1 = args.alpha_max.or(cfg.alpha_max).unwrap_or(boxx.alpha.1);
    boxx.beta.0 = args.beta_min.or(cfg.beta_min).unwrap_or(boxx.beta.0);
    boxx.beta.1 = args.beta_max.or(cfg.beta_max).unwrap_or(boxx.beta.1);
    boxx.weight_max = args
        .weight_max
        .or(cfg.weight_max)
        .unwrap_or(boxx.weight_max);
    let p_min = args.p_min.or(cfg.p_min);
    let p_max = args.p_max.or(cfg.p_max);
    if p_min.is_some() || p_max.is_some() {
        boxx.p = Some((p_min.unwrap_or(0), p_max.unwrap_or(boxx.m.1)));
    }
    let q_min = args.q_min.or(cfg.q_min);
    let q_max = args.q_max.or(cfg.q_max);
    if q_min.is_some() || q_max.is_some() {
        boxx.q = Some((q_min.unwrap_or(0), q_max.unwrap_or(boxx.m.1)));
    }

    let report = sweep_validate(&boxx);
    let record = json!({
        "cases_checked": report.cases_checked,
        "violations": report.violations.iter().map(case_record).collect::<Vec<_>>(),
        "boundary_witnesses": report
            .boundary_witnesses
            .iter()
            .map(case_record)
            .collect::<Vec<_>>(),
    });

    let mut text = format!(
        "cases checked: {}\nviolations: {}\nboundary witnesses: {}",
        report.cases_checked,
        report.violations.len(),
        report.boundary_witnesses.len()
    );
    for case in &report.violations {
        let _ = write!(text, "\nVIOLATION {}", case_text(case));
    }
    Ok((record, text))
}

fn terms_record(dec: &SchurDecomposition) -> Value {
    json!({
        "terms": dec
            .terms()
            .map(|(shape, mult)| json!({ "partition": shape.parts(), "multiplicity": mult }))
            .collect::<Vec<_>>(),
    })
}

fn bott_record(result: &BottResult) -> Value {
    match result {
        BottResult::Zero => json!({ "zero": true }),
        BottResult::NonZero { degree, psi, dim } => json!({
            "q": degree,
            "psi": psi.entries(),
            "dim": dim.to_string(),
        }),
    }
}

fn cohomology_record(coh: &BTreeMap<u64, BigUint>) -> Value {
    let mut map = Map::new();
    for (q, dim) in coh {
        map.insert(q.to_string(), dim.to_string().into());
    }
    json!({ "cohomology": map })
}

fn cohomology_text(coh: &BTreeMap<u64, BigUint>) -> String {
    if coh.is_empty() {
        return "no cohomology".to_string();
    }
    coh.iter()
        .map(|(q, dim)| format!("q={q}: {dim}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn verdict_record(v: &VanishingVerdict) -> Value {
    let mut map = Map::new();
    map.insert("vanishes".into(), v.vanishes.into());
    map.insert("threshold".into(), v.threshold.into());
    map.insert("excess".into(), v.excess.into());
    if let Some(r0) = v.r0 {
        map.insert("r0".into(), r0.into());
    }
    map.insert("hypothesis".into(), v.hypothesis.clone().into());
    Value::Object(map)
}

fn verdict_text(v: &VanishingVerdict) -> String {
    let r0 = v.r0.map(|r| format!(", r0 {r}")).unwrap_or_default();
    format!(
        "vanishes: {} (threshold {}, excess {}{r0}) assuming {}",
        v.vanishes, v.threshold, v.excess, v.hypothesis
    )
}

fn cell_record(p: i64, cell: &SpectralCell) -> Value {
    match cell {
        SpectralCell::Zero => json!({ "p": p, "zero": true }),
        SpectralCell::Cohomology { alpha_p, j_p } => json!({ "p": p, "alpha": alpha_p, "j": j_p }),
    }
}

fn cell_text(p: i64, cell: &SpectralCell) -> String {
    match cell {
        SpectralCell::Zero => format!("p={p}: zero"),
        SpectralCell::Cohomology { alpha_p, j_p } => format!("p={p}: alpha={alpha_p}, j={j_p}"),
    }
}

fn case_record(case: &SweepCase) -> Value {
    json!({
        "predicate": case.predicate,
        "m": case.m,
        "degrees": case.degrees,
        "c": case.c,
        "alpha": case.alpha,
        "beta": case.beta,
        "p": case.p,
        "q": case.q,
        "verdict": verdict_record(&case.verdict),
        "dim": case.dim.to_string(),
    })
}

fn case_text(case: &SweepCase) -> String {
    format!(
        "[{}] m={} degrees={:?} c={} alpha={} beta={} (p,q)=({},{}): {}, dim {}",
        case.predicate,
        case.m,
        case.degrees,
        case.c,
        case.alpha,
        case.beta,
        case.p,
        case.q,
        verdict_text(&case.verdict),
        case.dim
    )
}
