//! One function per subcommand; each returns a pre-rendered [`Output`].

use serde::Serialize;
use towergaps::lattice::{AggParams, MultiParams};
use towergaps::oracle::{membership_oracle_sel, pure_gap_oracle_sel};
use towergaps::riemann_roch::{basis_agg, basis_multi, basis_prime, dim, multi_to_divisor};
use towergaps::semigroup::{
    default_bound, in_g0_by_increments, in_g0_qp, in_h_by_increments, in_h_qp, one_point_gaps, pure_gaps,
};
use towergaps::tower::{genus, monomial_divisor_multi, monomial_divisor_x123, monomial_divisor_xwv};
use towergaps::{verify_suite, BoxSize, Divisor, PlaceId, PlaceSelection, Suite, TowerParams, VerificationReport};

use crate::output::{join, row, Output};
use crate::{BoxArg, Cli, CoeffArgs, Command, DivisorArgs, VariantArg};

type Res<T> = std::result::Result<T, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn run(cli: &Cli) -> Res<Output> {
    let q = cli.global.q.ok_or("--q is required")?;
    let params = TowerParams::new(q).map_err(err)?;
    let verbose = cli.global.verbose;
    match &cli.command {
        Command::Genus { level } => cmd_genus(&params, *level),
        Command::Divisor(a) => cmd_divisor(&params, a),
        Command::Dim(a) => cmd_dim(&params, a),
        Command::Basis { coeffs, variant } => cmd_basis(&params, coeffs, *variant),
        Command::Gaps { places, bound } => cmd_gaps(&params, places, *bound),
        Command::Check { places, tuple } => cmd_check(&params, places, tuple),
        Command::Verify {
            suite,
            box_size,
            timings,
        } => cmd_verify(&params, suite, *box_size, *timings, verbose),
    }
}

fn parse_list(s: &str) -> Res<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("not an integer: {x:?}")))
        .collect()
}

fn parse_triple(s: &str) -> Res<(i64, i64, i64)> {
    match parse_list(s)?.as_slice() {
        &[i, j, k] => Ok((i, j, k)),
        v => Err(format!("expected three comma-separated integers, got {}", v.len())),
    }
}

/// `i:(j_1,..):(k_1,..)`.
fn parse_multi(s: &str) -> Res<(i64, Vec<i64>, Vec<i64>)> {
    let parts: Vec<&str> = s.split(':').collect();
    let [i, j, k] = parts.as_slice() else {
        return Err(format!("expected i:(j..):(k..), got {s:?}"));
    };
    let inner = |p: &str| -> Res<Vec<i64>> {
        let p = p.trim();
        let p = p
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| format!("expected a parenthesized list, got {p:?}"))?;
        parse_list(p)
    };
    let i = i.trim().parse::<i64>().map_err(|_| format!("not an integer: {i:?}"))?;
    Ok((i, inner(j)?, inner(k)?))
}

fn parse_places(params: &TowerParams, s: &str) -> Res<Vec<PlaceId>> {
    s.split(',')
        .map(|n| PlaceId::parse_block_name(n.trim(), params).map_err(err))
        .collect()
}

fn divisor_rows(d: &Divisor) -> (Vec<Vec<String>>, Vec<String>) {
    let mut csv = vec![vec!["Q".to_string(), d.q_coeff.to_string()]];
    for (n, c) in d.s0.iter().enumerate() {
        csv.push(vec![format!("S0_{}", n + 1), c.to_string()]);
    }
    for (n, c) in d.s1.iter().enumerate() {
        csv.push(vec![format!("S1_{}", n + 1), c.to_string()]);
    }
    csv.push(vec!["P".to_string(), d.p.to_string()]);
    let plain = vec![csv.iter().map(|r| format!("{}={}", r[0], r[1])).collect::<Vec<_>>().join(" ")];
    (csv, plain)
}

fn cmd_genus(params: &TowerParams, level: i64) -> Res<Output> {
    #[derive(Serialize)]
    struct GenusOut {
        q: i64,
        level: i64,
        genus: i64,
    }
    let g = genus(params, level).map_err(err)?;
    Output::new(
        &GenusOut {
            q: params.q(),
            level,
            genus: g,
        },
        vec![row(&[g])],
        vec![g.to_string()],
    )
}

fn cmd_divisor(params: &TowerParams, a: &DivisorArgs) -> Res<Output> {
    let d = if let Some(s) = &a.xwv {
        let (i, j, k) = parse_triple(s)?;
        monomial_divisor_xwv(params, i, j, k)
    } else if let Some(s) = &a.x123 {
        let (i, j, k) = parse_triple(s)?;
        monomial_divisor_x123(params, i, j, k)
    } else if let Some(s) = &a.multi {
        let (i, j, k) = parse_multi(s)?;
        monomial_divisor_multi(params, i, &j, &k)
    } else {
        return Err("one of --xwv, --x123, --multi is required".into());
    }
    .map_err(err)?;
    let (csv, plain) = divisor_rows(&d);
    Output::new(&d, csv, plain)
}

/// A block given as one value is repeated over the block.
fn block(params: &TowerParams, s: &str) -> Res<(Vec<i64>, bool)> {
    let v = parse_list(s)?;
    let m = params.block_len();
    match v.len() {
        1 => Ok((vec![v[0]; m], true)),
        n if n == m => Ok((v, false)),
        n => Err(format!("expected 1 or {m} values, got {n}")),
    }
}

fn multi_params(params: &TowerParams, a: &CoeffArgs) -> Res<(MultiParams, bool)> {
    let (s, s_scalar) = block(params, &a.s)?;
    let (t, t_scalar) = block(params, &a.t)?;
    let g = MultiParams::new(params, a.r, s, t, a.u).map_err(err)?;
    Ok((g, s_scalar && t_scalar))
}

fn cmd_dim(params: &TowerParams, a: &CoeffArgs) -> Res<Output> {
    #[derive(Serialize)]
    struct DimOut {
        q: i64,
        #[serde(rename = "G")]
        g: Divisor,
        dim: i64,
    }
    let (g, _) = multi_params(params, a)?;
    let d = multi_to_divisor(params, &g).map_err(err)?;
    let n = dim(params, &d).map_err(err)?;
    Output::new(
        &DimOut {
            q: params.q(),
            g: d,
            dim: n,
        },
        vec![row(&[n])],
        vec![n.to_string()],
    )
}

fn cmd_basis(params: &TowerParams, a: &CoeffArgs, variant: VariantArg) -> Res<Output> {
    let (g, scalar) = multi_params(params, a)?;
    let agg = || -> Res<AggParams> {
        if scalar {
            Ok(AggParams::new(g.r, g.s[0], g.t[0], g.u))
        } else {
            Err("this variant needs a single value for --s and for --t".into())
        }
    };
    let basis = match variant {
        VariantArg::Auto if scalar => basis_agg(params, &agg()?),
        VariantArg::Auto | VariantArg::Multi => basis_multi(params, &g),
        VariantArg::Xwv => basis_agg(params, &agg()?),
        VariantArg::X1x2x3 => basis_prime(params, &agg()?),
    }
    .map_err(err)?;
    let csv: Vec<Vec<String>> = basis.exponents.iter().map(|e| row(e)).collect();
    let plain = basis.exponents.iter().map(|e| join(e, " ")).collect();
    Output::new(&basis, csv, plain)
}

#[derive(Serialize)]
struct GapsOut {
    q: i64,
    places: Vec<String>,
    bound: i64,
    count: usize,
    tuples: Vec<Vec<i64>>,
}

fn cmd_gaps(params: &TowerParams, places: &str, bound: Option<i64>) -> Res<Output> {
    let places = parse_places(params, places)?;
    let sel = PlaceSelection::from_places(params, &places).map_err(err)?;
    let bound = bound.unwrap_or_else(|| default_bound(params));
    let tuples = if places == [PlaceId::Q] {
        one_point_gaps(params)
            .map_err(err)?
            .into_iter()
            .filter(|&a| a <= bound)
            .map(|a| vec![a])
            .collect()
    } else {
        pure_gaps(params, &sel, bound).map_err(err)?
    };
    let csv = tuples.iter().map(|t| row(t)).collect();
    let plain = tuples.iter().map(|t| join(t, ",")).collect();
    Output::new(
        &GapsOut {
            q: params.q(),
            places: places.iter().map(|p| p.block_name()).collect(),
            bound,
            count: tuples.len(),
            tuples,
        },
        csv,
        plain,
    )
}

#[derive(Serialize)]
struct CheckOut {
    q: i64,
    places: Vec<String>,
    tuple: Vec<i64>,
    in_semigroup: bool,
    pure_gap: bool,
    oracle_agreement: bool,
}

fn cmd_check(params: &TowerParams, places: &str, tuple: &str) -> Res<Output> {
    let places = parse_places(params, places)?;
    let sel = PlaceSelection::from_places(params, &places).map_err(err)?;
    let tuple = parse_list(tuple)?;
    if tuple.len() != places.len() {
        return Err(format!("{} places but {} tuple entries", places.len(), tuple.len()));
    }
    let (s, t) = tuple.split_at(sel.k);
    let h = [
        in_h_qp(params, &sel, s, t).map_err(err)?,
        in_h_by_increments(params, &sel, s, t).map_err(err)?,
        membership_oracle_sel(params, &sel, s, t).map_err(err)?,
    ];
    // pure gaps have every entry at least 1
    let g0 = if tuple.iter().all(|&x| x >= 1) {
        [
            in_g0_qp(params, &sel, s, t).map_err(err)?,
            in_g0_by_increments(params, &sel, s, t).map_err(err)?,
            pure_gap_oracle_sel(params, &sel, s, t).map_err(err)?,
        ]
    } else {
        [false; 3]
    };
    let agree = h.iter().all(|&x| x == h[0]) && g0.iter().all(|&x| x == g0[0]);
    let out = CheckOut {
        q: params.q(),
        places: places.iter().map(|p| p.block_name()).collect(),
        tuple,
        in_semigroup: h[0],
        pure_gap: g0[0],
        oracle_agreement: agree,
    };
    let csv = vec![row(&[out.in_semigroup, out.pure_gap, out.oracle_agreement])];
    let plain = vec![
        format!("in_semigroup={}", out.in_semigroup),
        format!("pure_gap={}", out.pure_gap),
        format!("oracle_agreement={}", out.oracle_agreement),
    ];
    let mut o = Output::new(&out, csv, plain)?;
    o.mismatch = !agree;
    Ok(o)
}

fn cmd_verify(params: &TowerParams, suites: &str, size: BoxArg, timings: bool, verbose: u8) -> Res<Output> {
    let mut list: Vec<Suite> = Vec::new();
    for name in suites.split(',') {
        for s in Suite::parse_group(name.trim()).map_err(err)? {
            if !list.contains(&s) {
                list.push(s);
            }
        }
    }
    let size = match size {
        BoxArg::Tiny => BoxSize::Tiny,
        BoxArg::Default => BoxSize::Default,
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for s in list {
        let mut r = verify_suite(params, s, size).map_err(err)?;
        if verbose > 0 {
            eprintln!(
                "{} {} checked={} mismatches={} ms={}",
                if r.passed() { "PASS" } else { "FAIL" },
                r.suite,
                r.checked,
                r.mismatch_count,
                r.wall_time_ms.unwrap_or(0)
            );
        }
        if !timings {
            r.wall_time_ms = None;
        }
        reports.push(r);
    }
    let csv = reports
        .iter()
        .map(|r| {
            let mut v = vec![
                r.suite.to_string(),
                r.q.to_string(),
                r.checked.to_string(),
                r.mismatch_count.to_string(),
                if r.passed() { "pass" } else { "fail" }.to_string(),
            ];
            if let Some(ms) = r.wall_time_ms {
                v.push(ms.to_string());
            }
            v
        })
        .collect();
    let plain = reports
        .iter()
        .map(|r| {
            let mut line = format!(
                "{} {} q={} checked={} mismatches={} box: {}",
                if r.passed() { "PASS" } else { "FAIL" },
                r.suite,
                r.q,
                r.checked,
                r.mismatch_count,
                r.parameter_box
            );
            if let Some(ms) = r.wall_time_ms {
                line.push_str(&format!(" ({ms} ms)"));
            }
            for m in &r.mismatches {
                line.push_str(&format!("\n  {m}"));
            }
            line
        })
        .collect();
    let mut o = Output::new(&reports, csv, plain)?;
    o.mismatch = reports.iter().any(|r| !r.passed());
    Ok(o)
}
