use std::fmt::Write as _;

use anyhow::{anyhow, bail, ensure, Context, Result};
use froblift::fano::{boundedness_bounds, ingest_table, BoundednessParams};
use froblift::random::random_poly;
use froblift::{
    default_var_names, fedder_is_fsplit, group_average, p1_invariant_scan, theorem_iso_check,
    CanonicalLiftRing, ChartLifting, GroupAction, IdealPresentation, MultiPoly, TraceSplitting,
    WittScalar, Zmod,
};
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{self, Chart, Splitting};
use crate::{ChartArgs, Cli, Command, SplitArgs, WittOp};

pub struct Report {
    pub result: Value,
    pub human: String,
}

impl Report {
    fn new(result: Value, human: impl Into<String>) -> Self {
        let mut human = human.into();
        if !human.ends_with('\n') {
            human.push('\n');
        }
        Report { result, human }
    }
}

fn show(f: &MultiPoly, vars: &[String]) -> String {
    f.display_with(vars).to_string()
}

fn show_all(fs: &[MultiPoly], vars: &[String]) -> Vec<String> {
    fs.iter().map(|f| show(f, vars)).collect()
}

fn show_matrix(m: &[Vec<MultiPoly>], vars: &[String]) -> Vec<Vec<String>> {
    m.iter().map(|row| show_all(row, vars)).collect()
}

fn chart(args: &ChartArgs) -> Result<Chart> {
    input::load_chart(&args.chart, args.p)
}

fn splitting(args: &SplitArgs) -> Result<Splitting> {
    match (&args.splitting, &args.vars, &args.u) {
        (Some(path), _, _) => input::load_splitting(path, args.p),
        (None, Some(vars), Some(u)) => {
            let p = args.p.ok_or_else(|| anyhow!("--u needs --p"))?;
            let vars = input::names_or_default(Some(vars), 0)?;
            input::splitting_from_parts(input::prime(p)?, vars, u)
        }
        _ => bail!("give --splitting FILE or --p, --vars and --u"),
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .context("starting worker threads")
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Witt { p, op, a, b } => witt(*p, *op, a, b.as_deref()),
        Command::LiftValidate(args) => lift_validate(args),
        Command::Delta { chart: args, f } => delta(args, f),
        Command::XiDet(args) => xi_det(args),
        Command::LogXiDet {
            chart: args,
            log_rank,
        } => log_xi_det(args, *log_rank),
        Command::SplitFromLift(args) => split_from_lift(args),
        Command::Compat { chart: args, ideal } => compat(args, ideal),
        Command::Blowup {
            chart: args,
            center,
        } => blowup(args, center.as_deref()),
        Command::Product { chart: args, other } => product(args, other),
        Command::Restrict {
            chart: args,
            divisor,
        } => restrict(args, divisor),
        Command::Psi {
            chart: args,
            phi,
            source_vars,
        } => psi(args, phi, source_vars.as_deref()),
        Command::PointLift { chart: args, point } => point_lift(args, point),
        Command::Roundtrip {
            chart: args,
            f,
            samples,
        } => roundtrip(args, f.as_deref(), *samples, cli.seed, cli.jobs),
        Command::Fedder { p, vars, f } => fedder(*p, vars.as_deref(), f),
        Command::CompatSplit { split, ideal } => compat_split(split, ideal),
        Command::Divisor { split, factors } => divisor(split, factors),
        Command::Average { split, group } => average(split, group, cli.seed),
        Command::CanonicalLiftCheck {
            split,
            chart,
            cap,
            samples,
        } => canonical_lift_check(split, chart.as_deref(), *cap, *samples, cli.seed),
        Command::P1Scan { primes } => p1_scan(primes, cli.jobs),
        Command::FanoScreen { file } => fano_screen(file),
        Command::Bounds { m, big_m } => bounds(*m, *big_m),
    }
}

fn witt_operand(prime: &froblift::Prime, text: &str) -> Result<WittScalar> {
    let v = input::int_list(text)?;
    ensure!(v.len() == 2, "a Witt vector is `a0,a1`, got `{text}`");
    Ok(WittScalar::new(prime.clone(), v[0], v[1]))
}

fn witt(p: u64, op: WittOp, a: &str, b: Option<&str>) -> Result<Report> {
    let prime = input::prime(p)?;
    let q = prime.square();
    let a = witt_operand(&prime, a)?;
    let b = b.map(|t| witt_operand(&prime, t)).transpose()?;
    let need_b = || b.clone().ok_or_else(|| anyhow!("this operation needs --b"));
    let (name, value, expected_ghost) = match op {
        WittOp::Add => {
            let b = need_b()?;
            ("add", a.add(&b)?, (a.ghost() + b.ghost()) % q)
        }
        WittOp::Sub => {
            let b = need_b()?;
            ("sub", a.sub(&b)?, (a.ghost() + q - b.ghost()) % q)
        }
        WittOp::Mul => {
            let b = need_b()?;
            let g = (a.ghost() as u128 * b.ghost() as u128 % q as u128) as u64;
            ("mul", a.mul(&b)?, g)
        }
        WittOp::Neg => ("neg", a.neg(), (q - a.ghost()) % q),
        // F is the identity on W_2(F_p)
        WittOp::Frobenius => ("frobenius", a.frobenius(), a.ghost()),
        WittOp::Ghost => ("ghost", a.clone(), a.ghost()),
    };
    let (c0, c1) = value.components();
    let ghost = value.ghost();
    let (a0, a1) = a.components();
    let mut result = json!({
        "p": p,
        "op": name,
        "a": [a0, a1],
        "value": [c0, c1],
        "ghost": ghost,
        "ghost_consistent": ghost == expected_ghost,
    });
    if let Some(b) = &b {
        let (b0, b1) = b.components();
        result["b"] = json!([b0, b1]);
    }
    let human = format!("({c0}, {c1})  ghost {ghost} mod {q}");
    Ok(Report::new(result, human))
}

fn lift_validate(args: &ChartArgs) -> Result<Report> {
    let c = chart(args)?;
    let deltas = show_all(c.lifting.deltas(), &c.vars);
    let mut human = format!(
        "valid Frobenius lifting mod {}^2 on {} variables\n",
        c.lifting.prime(),
        c.vars.len()
    );
    for (v, d) in c.vars.iter().zip(&deltas) {
        writeln!(human, "delta({v}) = {d}").unwrap();
    }
    let result = json!({
        "p": c.lifting.prime().get(),
        "vars": c.vars,
        "images": show_all(c.lifting.images(), &c.vars),
        "deltas": deltas,
        "valid": true,
    });
    Ok(Report::new(result, human))
}

fn delta(args: &ChartArgs, f: &str) -> Result<Report> {
    let c = chart(args)?;
    let f = input::poly(f, &c.vars, &c.zp2())?;
    let d = show(&c.lifting.delta(&f)?, &c.vars);
    let result = json!({ "f": show(&f, &c.vars), "delta": d });
    Ok(Report::new(result, d))
}

fn xi_det(args: &ChartArgs) -> Result<Report> {
    let c = chart(args)?;
    let xi = c.lifting.xi_matrix()?;
    let det = show(&xi.det, &c.vars);
    let result = json!({
        "p": c.lifting.prime().get(),
        "vars": c.vars,
        "matrix": show_matrix(&xi.entries, &c.vars),
        "det": det,
    });
    Ok(Report::new(result, det))
}

fn log_xi_det(args: &ChartArgs, log_rank: Option<usize>) -> Result<Report> {
    let c = chart(args)?;
    let r = log_rank
        .or(c.log_rank)
        .ok_or_else(|| anyhow!("no --log-rank and the chart has no `log_rank`"))?;
    let xi = c.lifting.log_xi_matrix(r)?;
    let det = show(&xi.det, &c.vars);
    let result = json!({
        "p": c.lifting.prime().get(),
        "vars": c.vars,
        "log_rank": r,
        "matrix": show_matrix(&xi.entries, &c.vars),
        "units": show_all(&xi.units, &c.vars),
        "unit_deltas": show_all(&xi.unit_deltas, &c.vars),
        "det": det,
    });
    Ok(Report::new(result, det))
}

fn split_from_lift(args: &ChartArgs) -> Result<Report> {
    let c = chart(args)?;
    let s = TraceSplitting::from_lifting(&c.lifting)?;
    let key = show(s.key(), &c.vars);
    let result = json!({
        "p": c.lifting.prime().get(),
        "vars": c.vars,
        "key": key,
        "unital": s.is_unital(),
    });
    Ok(Report::new(result, format!("sigma(f) = Tr(({key}) f)")))
}

fn compat(args: &ChartArgs, ideal: &str) -> Result<Report> {
    let c = chart(args)?;
    let gens = input::poly_list(ideal, &c.vars, &c.zp2())?;
    ensure!(!gens.is_empty(), "--ideal has no generators");
    let ideal = IdealPresentation::new(gens)?;
    let ok = c.lifting.is_compatible_with_ideal(&ideal)?;
    let result = json!({
        "ideal": show_all(ideal.generators(), &c.vars),
        "compatible": ok,
    });
    Ok(Report::new(
        result,
        if ok { "compatible" } else { "not compatible" },
    ))
}

fn blowup(args: &ChartArgs, center: Option<&str>) -> Result<Report> {
    let c = chart(args)?;
    let center = match center {
        Some(text) => text
            .split(',')
            .map(|t| input::resolve_var(t, &c.vars))
            .collect::<Result<Vec<_>>>()?,
        None => c
            .center
            .clone()
            .ok_or_else(|| anyhow!("no --center and the chart has no `center`"))?,
    };
    let cert = c.lifting.blowup_extends(&center)?;
    let name = |i: usize| c.vars[i].clone();
    let pairwise: Vec<Value> = cert
        .pairwise
        .iter()
        .map(|&((i, j), ok)| json!({ "pair": [name(cert.center[i]), name(cert.center[j])], "holds": ok }))
        .collect();
    let direct: Vec<Value> = cert
        .direct
        .iter()
        .map(|&(i, ok)| json!({ "var": name(cert.center[i]), "holds": ok }))
        .collect();
    let center_names: Vec<String> = cert.center.iter().map(|&i| name(i)).collect();
    let result = json!({
        "center": center_names,
        "deltas": show_all(&cert.deltas, &c.vars),
        "pairwise": pairwise,
        "direct": direct,
        "extends": cert.extends,
    });
    let human = format!(
        "{} to the blow-up along ({})",
        if cert.extends {
            "extends"
        } else {
            "does not extend"
        },
        center_names.join(", ")
    );
    Ok(Report::new(result, human))
}

fn product(args: &ChartArgs, other: &std::path::Path) -> Result<Report> {
    let a = chart(args)?;
    let b = input::load_chart(other, Some(a.lifting.prime().get()))?;
    let l = a.lifting.product(&b.lifting)?;
    let n = l.nvars();
    let mut vars: Vec<String> = a.vars.iter().chain(&b.vars).cloned().collect();
    if input::check_names(&vars).is_err() {
        vars = default_var_names(n);
    }
    let (d1, d2) = (a.lifting.xi_matrix()?.det, b.lifting.xi_matrix()?.det);
    let expected = &d1.shift_variables(0, n) * &d2.shift_variables(a.vars.len(), n);
    let det = l.xi_matrix()?.det;
    let holds = det == expected;
    let result = json!({
        "vars": vars,
        "images": show_all(l.images(), &vars),
        "det": show(&det, &vars),
        "factor_dets": [show(&d1, &a.vars), show(&d2, &b.vars)],
        "det_is_product": holds,
    });
    let human = format!(
        "det = {}  ({})",
        show(&det, &vars),
        if holds {
            "product of the factor determinants"
        } else {
            "MISMATCH"
        }
    );
    Ok(Report::new(result, human))
}

fn restrict(args: &ChartArgs, divisor: &str) -> Result<Report> {
    let c = chart(args)?;
    let i = input::resolve_var(divisor, &c.vars)?;
    let r = c.lifting.restrict_to_coordinate_divisor(i)?;
    let mut vars = c.vars.clone();
    let removed = vars.remove(i);
    let result = json!({
        "divisor": removed,
        "vars": vars,
        "images": show_all(r.images(), &vars),
        "deltas": show_all(r.deltas(), &vars),
    });
    let mut human = String::new();
    for (v, img) in vars.iter().zip(r.images()) {
        writeln!(human, "{v} -> {}", show(img, &vars)).unwrap();
    }
    Ok(Report::new(result, human))
}

fn psi(args: &ChartArgs, phi: &str, source_vars: Option<&str>) -> Result<Report> {
    let c = chart(args)?;
    let src = match source_vars {
        Some(names) => input::names_or_default(Some(names), 0)?,
        None => input::infer_default_names(phi.split(';'))?,
    };
    let phi = input::poly_list(phi, &src, &c.fp())?;
    ensure!(
        phi.len() == c.vars.len(),
        "--phi has {} components but the chart has {} variables",
        phi.len(),
        c.vars.len()
    );
    let psi = c.lifting.base_change_psi(&phi)?;
    let images = show_all(&psi, &src);
    let result = json!({
        "source_vars": src,
        "phi": show_all(&phi, &src),
        "images": images,
    });
    let mut human = String::new();
    for (v, img) in c.vars.iter().zip(&images) {
        writeln!(human, "{v} -> {img}").unwrap();
    }
    Ok(Report::new(result, human))
}

fn point_lift(args: &ChartArgs, point: &str) -> Result<Report> {
    let c = chart(args)?;
    let p = c.lifting.prime().get() as i64;
    let a: Vec<u64> = input::int_list(point)?
        .into_iter()
        .map(|v| v.rem_euclid(p) as u64)
        .collect();
    ensure!(
        a.len() == c.vars.len(),
        "--point has {} coordinates but the chart has {} variables",
        a.len(),
        c.vars.len()
    );
    let lift = c.lifting.canonical_point_lift(&a)?;
    let human = lift
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let result = json!({ "point": a, "lift": lift, "modulus": p * p });
    Ok(Report::new(result, format!("({human}) mod {}", p * p)))
}

fn roundtrip(
    args: &ChartArgs,
    f: Option<&str>,
    samples: usize,
    seed: u64,
    jobs: usize,
) -> Result<Report> {
    let c = chart(args)?;
    if let Some(f) = f {
        let f = input::poly(f, &c.vars, &c.zp2())?;
        let direct = c.lifting.pullback(&f)?;
        let nu = c.lifting.nu(&f)?;
        let back = ChartLifting::theta(&nu);
        let (n0, n1) = nu.components();
        let result = json!({
            "f": show(&f, &c.vars),
            "pullback": show(&direct, &c.vars),
            "nu": [show(n0, &c.vars), show(n1, &c.vars)],
            "agrees": back == direct,
        });
        let human = format!(
            "F*(f) = {}  ({})",
            show(&direct, &c.vars),
            if back == direct {
                "theta(nu(f)) agrees"
            } else {
                "theta(nu(f)) DIFFERS"
            }
        );
        return Ok(Report::new(result, human));
    }
    let ring = c.zp2();
    let n = c.vars.len();
    let check = |i: usize| -> Result<bool> {
        let mut rng = StdRng::seed_from_u64(seed.wrapping_add(i as u64));
        let f = random_poly(&mut rng, &ring, n, 3, 4);
        Ok(c.lifting.nu_theta_roundtrip(&f)? == c.lifting.pullback(&f)?)
    };
    let outcomes: Vec<bool> = pool(jobs)?.install(|| {
        (0..samples)
            .into_par_iter()
            .map(check)
            .collect::<Result<Vec<_>>>()
    })?;
    let failures = outcomes.iter().filter(|ok| !**ok).count();
    let result =
        json!({ "samples": samples, "seed": seed, "failures": failures, "agrees": failures == 0 });
    Ok(Report::new(
        result,
        format!("{} of {samples} samples agree", samples - failures),
    ))
}

fn fedder(p: u64, vars: Option<&str>, f: &str) -> Result<Report> {
    let vars = match vars {
        Some(names) => input::names_or_default(Some(names), 0)?,
        None => input::infer_default_names([f])?,
    };
    let f = input::poly(f, &vars, &Zmod::fp(input::prime(p)?))?;
    let ok = fedder_is_fsplit(&f)?;
    let result = json!({ "p": p, "f": show(&f, &vars), "fsplit": ok });
    Ok(Report::new(
        result,
        if ok {
            "F-split at the origin"
        } else {
            "not F-split at the origin"
        },
    ))
}

fn compat_split(args: &SplitArgs, ideal: &str) -> Result<Report> {
    let s = splitting(args)?;
    let gens = input::poly_list(ideal, &s.vars, &s.fp())?;
    ensure!(!gens.is_empty(), "--ideal has no generators");
    let ideal = IdealPresentation::new(gens)?;
    let ok = s.sigma.is_compatible_with_ideal(&ideal)?;
    let result = json!({
        "key": show(s.sigma.key(), &s.vars),
        "ideal": show_all(ideal.generators(), &s.vars),
        "compatible": ok,
    });
    Ok(Report::new(
        result,
        if ok { "compatible" } else { "not compatible" },
    ))
}

fn divisor(args: &SplitArgs, factors: &str) -> Result<Report> {
    let s = splitting(args)?;
    let factors = input::poly_list(factors, &s.vars, &s.fp())?;
    ensure!(!factors.is_empty(), "--factors is empty");
    let report = s.sigma.divisor(&factors);
    let mut human = String::new();
    let components: Vec<Value> = report
        .components
        .iter()
        .map(|c| {
            let f = show(&c.factor, &s.vars);
            writeln!(
                human,
                "{f}: multiplicity {}, coefficient {}",
                c.multiplicity, c.coefficient
            )
            .unwrap();
            json!({
                "factor": f,
                "multiplicity": c.multiplicity,
                "coefficient": c.coefficient.to_string(),
                "within_bound": c.within_bound,
            })
        })
        .collect();
    let residual = show(&report.residual, &s.vars);
    writeln!(human, "residual: {residual}").unwrap();
    let result = json!({
        "key": show(s.sigma.key(), &s.vars),
        "components": components,
        "residual": residual,
    });
    Ok(Report::new(result, human))
}

fn average(args: &SplitArgs, group: &std::path::Path, seed: u64) -> Result<Report> {
    let s = splitting(args)?;
    let ring = s.fp();
    let maps = input::load_group(group, &s.vars, &ring)?;
    let group = GroupAction::new(maps)?;
    let avg = group_average(&s.sigma, &group)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let n = s.vars.len();
    let probes: Vec<MultiPoly> = (0..24)
        .map(|_| random_poly(&mut rng, &ring, n, 3 * ring.p() as u32, 4))
        .collect();
    let invariant = group.is_invariant(&avg, &probes);
    let key = show(avg.key(), &s.vars);
    let result = json!({
        "order": group.order(),
        "key": key,
        "unital": avg.is_unital(),
        "invariant_on_probes": invariant,
    });
    Ok(Report::new(result, format!("averaged key: {key}")))
}

fn canonical_lift_check(
    args: &SplitArgs,
    chart_path: Option<&std::path::Path>,
    cap: Option<u32>,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    let (sigma, vars, lifting) = match chart_path {
        Some(path) => {
            let c = input::load_chart(path, args.p)?;
            let s = TraceSplitting::from_lifting(&c.lifting)?;
            (s, c.vars, Some(c.lifting))
        }
        None => {
            let s = splitting(args)?;
            (s.sigma, s.vars, None)
        }
    };
    let p = sigma.prime().get() as u32;
    let cap = cap.unwrap_or(2 * p);
    let key = show(sigma.key(), &vars);
    let ring = CanonicalLiftRing::new(sigma)?;
    let flat = ring.flatness_check(cap);
    let mut result = json!({
        "key": key,
        "flatness": {
            "degree_cap": cap,
            "checked": flat.checked,
            "violations": flat.violations,
            "passed": flat.passed(),
        },
    });
    let mut human = format!(
        "flatness up to degree {cap}: {} ({} checked, {} violations)\n",
        if flat.passed() { "ok" } else { "FAILED" },
        flat.checked,
        flat.violations
    );
    if let Some(l) = lifting {
        let iso = theorem_iso_check(&l, seed, samples)?;
        result["comparison"] = json!({
            "samples": iso.samples,
            "section": iso.section,
            "additive": iso.additive,
            "multiplicative": iso.multiplicative,
            "injective_on_p": iso.injective_on_p,
            "passed": iso.passed(),
        });
        if iso.passed() {
            writeln!(human, "comparison with the lifting: ok ({samples} samples)").unwrap();
        } else {
            writeln!(
                human,
                "comparison with the lifting FAILED: {}",
                iso.failures().join(", ")
            )
            .unwrap();
        }
    }
    Ok(Report::new(result, human))
}

fn p1_scan(primes: &[u64], jobs: usize) -> Result<Report> {
    ensure!(!primes.is_empty(), "no primes to scan");
    let primes = primes
        .iter()
        .map(|&p| input::prime(p))
        .collect::<Result<Vec<_>>>()?;
    let coefficients: Vec<u64> =
        pool(jobs)?.install(|| primes.par_iter().map(p1_invariant_scan).collect());
    let mut human = String::new();
    let rows: Vec<Value> = primes
        .iter()
        .zip(&coefficients)
        .map(|(p, c)| {
            writeln!(human, "p = {p}: {c}").unwrap();
            json!({ "p": p.get(), "coefficient": c })
        })
        .collect();
    let odd_zero = primes
        .iter()
        .zip(&coefficients)
        .all(|(p, &c)| p.get() == 2 || c == 0);
    let result = json!({ "primes": rows, "odd_primes_all_zero": odd_zero });
    Ok(Report::new(result, human))
}

fn fano_screen(file: &std::path::Path) -> Result<Report> {
    let report = ingest_table(file).with_context(|| format!("screening {}", file.display()))?;
    let mut human = String::new();
    for r in &report.records {
        writeln!(
            human,
            "{}: chi(T) = {}, c3 = {}, {:?}",
            r.record.id, r.chi_tangent, r.euler_c3, r.verdict
        )
        .unwrap();
    }
    for e in &report.errors {
        writeln!(human, "line {}: {}", e.line, e.message).unwrap();
    }
    let s = &report.summary;
    writeln!(
        human,
        "{} rows: {} not rigid, {} possibly rigid, {} errors",
        s.rows, s.not_rigid, s.possibly_rigid, s.errors
    )
    .unwrap();
    Ok(Report::new(serde_json::to_value(&report)?, human))
}

fn bounds(m: u64, big_m: u64) -> Result<Report> {
    let params = BoundednessParams { m, big_m };
    let r = boundedness_bounds(params)?;
    let human = format!(
        "N = {}, chain sum = {} ({})",
        r.n,
        r.chain_sum,
        if r.strict {
            "strictly below N"
        } else {
            "not below N"
        }
    );
    let mut result = serde_json::to_value(&r)?;
    result["params"] = serde_json::to_value(params)?;
    Ok(Report::new(result, human))
}
