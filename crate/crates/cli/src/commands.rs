use serde_json::{json, Value};
use symdef_core::asymptotics::{fit_quasipolynomial, jacobian_rank_full, sdefect_degree, waldschmidt};
use symdef_core::cover::{classify_indecomposable_2cover, symbolic_power_capped, Cover2Classification};
use symdef_core::graph::enumerate::{connected_graphs, MAX_ENUMERATION_VERTICES};
use symdef_core::sdefect::{
    check_indecomposability_conditions, check_indecomposability_exhaustive, recursion_hypotheses, sdefect_complete_closed_form,
    sdefect_cycle, sdefect_formula_with, sdefect_recursive_with, CoverPowers, ExhaustiveOptions, Limits, SdefectReport,
};
use symdef_core::verify::{sweep_complete, sweep_cycle, sweep_decomposition, sweep_dupvil, sweep_triangle_tail, Check, Sweep};
use symdef_core::{Error, Family, Graph};

use crate::args::{Command, Global, GraphSource, MethodArg, OptionalGraphSource};
use crate::error::CliError;
use crate::range::IntList;
use crate::report::Report;

type Result<T, E = CliError> = std::result::Result<T, E>;

pub struct Outcome {
    pub report: Report,
    /// Some verification disagreed; maps to exit code 2.
    pub mismatch: bool,
}

pub fn run(cmd: &Command, global: &Global) -> Result<Outcome> {
    let lim = global.limits();
    let mut input = json!({
        "seed": global.seed,
        "max_gens": lim.max_gens,
        "max_m": lim.max_m,
    });
    let mut mismatch = false;
    let report = match cmd {
        Command::CoverIdeal { source, m } => {
            let g = load(source, &mut input)?;
            let m = check_m(*m, lim)?;
            input["m"] = json!(m);
            let ideal = symbolic_power_capped(&g, m, lim.max_gens)?;
            let mut report = Report::new(cmd.name(), input);
            if g.edge_count() == 0 {
                report.warn("graph has no edges: the cover ideal is the unit ideal");
            }
            report.push(json!({
                "m": m,
                "mu": ideal.mu(),
                "alpha": ideal.alpha()?,
                "degrees": ideal.degrees(),
                "generators": ideal.gens(),
            }));
            report
        }

        Command::Sdefect {
            source,
            m,
            method,
            witnesses,
        } => {
            let g = load(source, &mut input)?;
            let ms = check_ms(m, lim)?;
            input["m"] = json!(ms);
            input["method"] = json!(format!("{method:?}").to_lowercase());
            let mut report = Report::new(cmd.name(), input);
            mismatch = sdefect(&g, &ms, *method, *witnesses, lim, &mut report)?;
            report
        }

        Command::Waldschmidt { source } => {
            let g = load(source, &mut input)?;
            let mut report = Report::new(cmd.name(), input);
            report.push(waldschmidt(&g, lim)?);
            report
        }

        Command::Fit {
            source,
            m,
            period,
            values,
            start,
        } => {
            input["period"] = json!(period);
            let (start, seq) = match (values, source.get()) {
                (Some(_), Some(_)) => {
                    return Err(CliError::Input("--values cannot be combined with a graph".into()));
                }
                (Some(v), None) => {
                    if m.is_some() {
                        return Err(CliError::Input("--m applies to graphs; use --start with --values".into()));
                    }
                    input["start"] = json!(start);
                    input["values"] = json!(v);
                    (*start, v.clone())
                }
                (None, Some(src)) => {
                    let g = load(&src, &mut input)?;
                    let m = m
                        .as_ref()
                        .ok_or_else(|| CliError::Input("--m is required when fitting a graph".into()))?;
                    let ms = check_ms(m, lim)?;
                    if !m.is_contiguous() {
                        return Err(CliError::Input("--m must be a contiguous range for fitting".into()));
                    }
                    input["m"] = json!(ms);
                    let powers = CoverPowers::new(&g, lim);
                    let seq = ms
                        .iter()
                        .map(|&m| Ok(powers.sdefect_brute(m)?.value as i64))
                        .collect::<Result<Vec<i64>>>()?;
                    (ms[0] as i64, seq)
                }
                (None, None) => return Err(CliError::Input("give --graph, --family or --values".into())),
            };
            let qp = fit_quasipolynomial(start, &seq, *period)?;
            let mut report = Report::new(cmd.name(), input);
            report.push(json!({
                "period": qp.period,
                "degree": qp.degree(),
                "onset": qp.onset,
                "polynomials": qp.polys.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "tail_samples": qp.tail_samples,
                "verification_margin": qp.verification_margin(),
                "values": seq,
            }));
            report
        }

        Command::Classify2 { source } => {
            let g = load(source, &mut input)?;
            let mut report = Report::new(cmd.name(), input);
            let powers = CoverPowers::new(&g, lim);
            let square = powers.ordinary(2)?;
            for f in powers.symbolic(2)?.gens() {
                let class = classify_indecomposable_2cover(&g, f)?;
                let in_square = square.contains(f)?;
                let agrees = class.is_some() != in_square;
                let (kind, partition) = match class {
                    None => ("decomposable", Value::Null),
                    Some(Cover2Classification::AllOnes) => ("all_ones", Value::Null),
                    Some(Cover2Classification::Szt(p)) => (
                        "szt",
                        json!({"zero": one_based(&p.zero), "two": one_based(&p.two), "one": one_based(&p.one)}),
                    ),
                };
                if !agrees {
                    mismatch = true;
                    report.warn(format!("{f}: classified {kind} but in_square = {in_square}"));
                }
                report.push(json!({
                    "cover": f,
                    "classification": kind,
                    "partition": partition,
                    "in_square": in_square,
                    "agrees": agrees,
                }));
            }
            report
        }

        Command::Indecomposability {
            source,
            k_max,
            s_max,
            max_total,
            alpha_only,
        } => {
            let g = load(source, &mut input)?;
            let opts = ExhaustiveOptions {
                k_max: *k_max,
                s_max: *s_max,
                max_total: *max_total,
                alpha_degree_only: *alpha_only,
            };
            input["options"] = json!(opts);
            let cert = check_indecomposability_conditions(&g);
            let outcome = check_indecomposability_exhaustive(&g, &opts, lim)?;
            let mut report = Report::new(cmd.name(), input);
            report.push(json!({
                "condition": cert.map(|c| c.to_string()),
                "holds": outcome.holds,
                "products_checked": outcome.products_checked,
                "summary": outcome.counterexample.as_ref().map(|c| c.to_string()),
                "counterexample": outcome.counterexample,
            }));
            report
        }

        Command::Degree { source, m_max } => {
            let g = load(source, &mut input)?;
            let m_max = check_m(*m_max, lim)?;
            input["m_max"] = json!(m_max);
            let degree = sdefect_degree(&g, m_max, lim)?;
            let independent = jacobian_rank_full(&degree.quotient_generators, global.seed)?;
            let mut row = serde_json::to_value(&degree).expect("report serializes");
            row["quotient_jacobian_full_rank"] = json!(independent);
            let mut report = Report::new(cmd.name(), input);
            if !degree.agrees {
                mismatch = true;
                report.warn(format!(
                    "quotient gives degree {}, fitted sequence gives {}",
                    degree.degree, degree.fitted_degree
                ));
            }
            report.push(row);
            report
        }

        Command::Verify { sweep, source, n, m } => {
            input["sweep"] = json!(sweep.to_string());
            let (checks, convention, warnings) = verify(*sweep, source, n.as_ref(), m.as_ref(), lim, &mut input)?;
            let mut report = Report::new(cmd.name(), input);
            for w in warnings {
                report.warn(w);
            }
            for c in &checks {
                mismatch |= !c.pass;
                let mut row = serde_json::to_value(c).expect("check serializes");
                if let Some(conv) = &convention {
                    row["convention"] = json!(conv);
                }
                report.push(row);
            }
            let failed = checks.iter().filter(|c| !c.pass).count();
            if failed > 0 {
                report.warn(format!("{failed} of {} instances failed", checks.len()));
            }
            report
        }
    };
    Ok(Outcome { report, mismatch })
}

fn load(source: &GraphSource, input: &mut Value) -> Result<Graph> {
    let g = match (&source.graph, &source.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.clone(),
                source: e,
            })?;
            input["source"] = json!({"file": path.display().to_string()});
            let g = Graph::from_json_str(&text)?;
            match path.file_stem().and_then(|s| s.to_str()) {
                Some(stem) => g.with_name(stem),
                None => g,
            }
        }
        (None, Some(family)) => {
            input["source"] = json!({"family": family});
            family.parse::<Family>()?.build()?
        }
        _ => return Err(CliError::Input("give exactly one of --graph and --family".into())),
    };
    input["graph"] = json!({
        "id": g.id(),
        "n": g.n(),
        "edges": g.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
    });
    Ok(g)
}

fn check_m(m: u32, lim: Limits) -> Result<u32> {
    if m == 0 {
        return Err(CliError::Input("powers start at m = 1".into()));
    }
    if m > lim.max_m {
        return Err(Error::ResourceCap {
            what: "power m",
            count: m as usize,
            cap: lim.max_m as usize,
        }
        .into());
    }
    Ok(m)
}

fn check_ms(ms: &IntList, lim: Limits) -> Result<Vec<u32>> {
    if ms.values().is_empty() {
        return Err(CliError::Input("empty m range".into()));
    }
    ms.values().iter().map(|&m| check_m(m, lim)).collect()
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

/// Length of the cycle if `g` is a single odd cycle, under any labelling.
fn odd_cycle_length(g: &Graph) -> Option<usize> {
    let n = g.n();
    (n >= 3 && n % 2 == 1 && g.edge_count() == n && g.is_connected() && (0..n).all(|v| g.degree(v) == 2))
        .then_some(n)
}

fn complete_size(g: &Graph) -> Option<usize> {
    let n = g.n();
    (n >= 3 && g.edge_count() == n * (n - 1) / 2).then_some(n)
}

fn sdefect_row(r: &SdefectReport, list_witnesses: bool, agrees: Option<bool>) -> Value {
    let count = if r.witnesses.is_empty() && r.value > 0 {
        Value::Null
    } else {
        json!(r.witnesses.len())
    };
    let mut row = json!({
        "m": r.m,
        "method": r.method.to_string(),
        "sdefect": r.value,
        "witnesses": count,
        "hypotheses": r.hypotheses,
    });
    if let Some(a) = agrees {
        row["agrees"] = json!(a);
    }
    if list_witnesses {
        row["witness_list"] = json!(r.witnesses);
    }
    row
}

fn sdefect(
    g: &Graph,
    ms: &[u32],
    method: MethodArg,
    list_witnesses: bool,
    lim: Limits,
    report: &mut Report,
) -> Result<bool> {
    let powers = CoverPowers::new(g, lim);
    let cycle = odd_cycle_length(g);
    let single = |r: SdefectReport, report: &mut Report| report.push(sdefect_row(&r, list_witnesses, None));
    match method {
        MethodArg::Brute => {
            for &m in ms {
                single(powers.sdefect_brute(m)?, report);
            }
        }
        MethodArg::Recursive => {
            for &m in ms {
                single(sdefect_recursive_with(&powers, m)?, report);
            }
        }
        MethodArg::Cycle => {
            let n = cycle.ok_or_else(|| CliError::Input("--method cycle needs an odd cycle".into()))?;
            for &m in ms {
                single(sdefect_cycle(n, m, lim)?, report);
            }
        }
        MethodArg::All => return sdefect_all(g, &powers, ms, cycle, list_witnesses, report),
    }
    Ok(false)
}

fn sdefect_all(
    g: &Graph,
    powers: &CoverPowers,
    ms: &[u32],
    cycle: Option<usize>,
    list_witnesses: bool,
    report: &mut Report,
) -> Result<bool> {
    let lim = powers.limits();
    let second = powers.sdefect_brute(2)?.value;
    if second != 1 {
        report.warn(format!("recursion skipped: sdefect(J(G),2) = {second}, not 1"));
    }
    let mut mismatch = false;
    for &m in ms {
        let brute = powers.sdefect_brute(m)?;
        let mut others = Vec::new();
        if second == 1 {
            let hypotheses = match recursion_hypotheses(powers, m) {
                Ok(h) => h,
                Err(Error::Precondition(why)) => vec![format!("unverified: {why}")],
                Err(e) => return Err(e.into()),
            };
            let mut r = sdefect_formula_with(powers, m)?;
            r.hypotheses = hypotheses;
            others.push(r);
        }
        if let Some(n) = cycle {
            others.push(sdefect_cycle(n, m, lim)?);
        }
        if let Some(n) = complete_size(g) {
            others.push(sdefect_complete_closed_form(n, m)?);
        }
        report.push(sdefect_row(&brute, list_witnesses, Some(true)));
        for r in others {
            let agrees = r.value == brute.value;
            if !agrees {
                mismatch = true;
                report.warn(format!(
                    "m={m}: {} gives {}, brute force gives {}",
                    r.method, r.value, brute.value
                ));
            }
            report.push(sdefect_row(&r, list_witnesses, Some(agrees)));
        }
    }
    Ok(mismatch)
}

fn enumerated(ns: &[usize]) -> Result<Vec<Graph>> {
    if let Some(&n) = ns.iter().find(|&&n| n > MAX_ENUMERATION_VERTICES) {
        return Err(CliError::Input(format!(
            "graph enumeration supports at most {MAX_ENUMERATION_VERTICES} vertices, got {n}"
        )));
    }
    Ok(ns.iter().flat_map(|&n| connected_graphs(n)).collect())
}

type Verified = (Vec<Check>, Option<String>, Vec<String>);

fn verify(
    sweep: Sweep,
    source: &OptionalGraphSource,
    n: Option<&IntList>,
    m: Option<&IntList>,
    lim: Limits,
    input: &mut Value,
) -> Result<Verified> {
    let list = |given: Option<&IntList>, default: &[u32]| given.map(|l| l.values().to_vec()).unwrap_or(default.to_vec());
    let graph = source.get();
    if graph.is_some() && !matches!(sweep, Sweep::Decomposition | Sweep::Dupvil) {
        return Err(CliError::Input(format!("verify {sweep} runs on its own family; drop --graph/--family")));
    }
    if graph.is_some() && n.is_some() {
        return Err(CliError::Input("--n enumerates graphs; it cannot be combined with a graph".into()));
    }
    let mut warnings = Vec::new();
    let ms_checked = |default: &[u32], input: &mut Value| -> Result<Vec<u32>> {
        let ms = check_ms(&IntList(list(m, default)), lim)?;
        input["m"] = json!(ms);
        Ok(ms)
    };
    let set_n = |ns: Vec<u32>, input: &mut Value| -> Vec<usize> {
        input["n"] = json!(ns);
        ns.into_iter().map(|n| n as usize).collect()
    };
    let out = match sweep {
        Sweep::Kn => {
            let ns = set_n(list(n, &[3, 4, 5]), input);
            let ms = ms_checked(&[2, 3, 4, 5, 6, 7, 8], input)?;
            (sweep_complete(&ns, &ms, lim)?, None, warnings)
        }
        Sweep::Cycle => {
            let ns = set_n(list(n, &[5, 7]), input);
            let ms = ms_checked(&[1, 2, 3, 4, 5, 6], input)?;
            let even: Vec<String> = ns.iter().filter(|&&n| n % 2 == 0).map(|n| n.to_string()).collect();
            if !even.is_empty() {
                warnings.push(format!("skipped even n: {}", even.join(",")));
            }
            (sweep_cycle(&ns, &ms, lim)?, None, warnings)
        }
        Sweep::TriangleTail => {
            let ns = set_n(list(n, &[5, 6, 7]), input);
            if ns.iter().any(|&n| n < 5) {
                warnings.push("the triangle-tail identity starts at n = 5; smaller n skipped".into());
            }
            let (convention, checks) = sweep_triangle_tail(&ns, lim)?;
            if convention.is_none() {
                warnings.push("no single path convention holds for every n; showing edge_count".into());
            }
            (checks, Some(convention.map_or("none".to_string(), |c| c.to_string())), warnings)
        }
        Sweep::Decomposition | Sweep::Dupvil => {
            let graphs = match graph {
                Some(src) => vec![load(&src, input)?],
                None => {
                    let ns = set_n(list(n, &[2, 3, 4, 5]), input);
                    enumerated(&ns)?
                }
            };
            let checks = if sweep == Sweep::Decomposition {
                let ms = ms_checked(&[3, 4, 5], input)?;
                sweep_decomposition(&graphs, &ms, lim)?
            } else {
                let graphs: Vec<Graph> = graphs.into_iter().filter(|g| !g.is_bipartite()).collect();
                sweep_dupvil(&graphs, lim)?
            };
            (checks, None, warnings)
        }
    };
    Ok(out)
}
