use serde_json::{json, Value};
use strata_core::divisors::{
    kappa, pair, stratum_divisor_full, stratum_divisor_interior, SIGN_CONVENTION_NOTE,
};
use strata_core::exact_ring::{int, Rational};
use strata_core::porteous::{bn_class, stratum_class, EXPECTED_CLASS_NOTE};
use strata_core::teich::{
    certify, curve_ratios, intersect_ratio, slope_and_bounds, CertifyCase, OtherBoundary,
};
use strata_core::{
    BnQuery, GradedPoly, LyapunovKind, LyapunovTable, MgnDivisor, Partition, TeichCurve,
    TestCurveNumbers,
};

use crate::expr::parse_q_list;
use crate::output::{self, fmt_q, q, OutputDocument};
use crate::{verify, CliError, Command, Context, EXIT_OK};

const REDUCED_NOTE: &str = "even λ classes eliminated using c(E)·c(E^∨) = 1";

pub fn dispatch(ctx: &Context, cmd: &Command) -> Result<(OutputDocument, i32), CliError> {
    let doc = match cmd {
        Command::Kappa { mu } => kappa_cmd(ctx, mu),
        Command::BnClass { g, mu, r, reduce } => bn_class_cmd(*g, mu, *r, *reduce)?,
        Command::StratumClass { g, mu, reduce } => stratum_class_cmd(*g, mu, *reduce)?,
        Command::StratumDivisor { g, interior } => stratum_divisor_cmd(*g, *interior)?,
        Command::Pair {
            g,
            curve,
            fixture,
            interior,
        } => pair_cmd(ctx, *g, curve.as_deref(), fixture.as_deref(), *interior)?,
        Command::Ratios {
            g,
            mu,
            l,
            divisor,
            chi_half,
        } => ratios_cmd(ctx, *g, mu, l, divisor.as_deref(), chi_half.as_ref())?,
        Command::Certify {
            case,
            g,
            a,
            l,
            kind,
            epsilon,
            s,
        } => certify_cmd(
            ctx,
            case.as_deref(),
            *g,
            a.as_ref(),
            l.as_ref(),
            kind.as_deref(),
            epsilon.as_ref(),
            s.as_ref(),
        )?,
        Command::Table => table_cmd(ctx)?,
        Command::Verify => return verify::verify_cmd(ctx),
    };
    Ok((doc, EXIT_OK))
}

fn kappa_cmd(ctx: &Context, mu: &Partition) -> OutputDocument {
    let k = kappa(mu);
    let mut doc = OutputDocument::new("kappa").input("mu", output::partition(mu));
    doc.result = json!({ "kappa": q(&k) });
    doc.text.push(format!("κ({mu}) = {}", fmt_q(&k, ctx.approx)));
    doc
}

fn class_doc(mut doc: OutputDocument, class: &GradedPoly, codim: u32, reduce: bool) -> OutputDocument {
    let mut notes = vec![EXPECTED_CLASS_NOTE];
    if reduce {
        notes.push(REDUCED_NOTE);
    }
    doc.result = json!({
        "class": output::poly(class),
        "codimension": codim,
        "reduced": reduce,
        "notes": notes,
    });
    doc.text.push(class.to_string());
    doc.text.extend(notes.iter().map(|n| format!("note: {n}")));
    doc
}

fn bn_class_cmd(g: u32, mu: &Partition, r: u32, reduce: bool) -> Result<OutputDocument, CliError> {
    let query = BnQuery::new(g, mu.clone(), r)?;
    let mut class = bn_class(&query)?;
    if reduce {
        class = class.reduce_lambda_even();
    }
    let doc = OutputDocument::new("bn-class")
        .input("g", json!(g))
        .input("mu", output::partition(mu))
        .input("r", json!(r))
        .input("reduce", json!(reduce));
    Ok(class_doc(doc, &class, query.codim(), reduce))
}

fn stratum_class_cmd(g: u32, mu: &Partition, reduce: bool) -> Result<OutputDocument, CliError> {
    let mut class = stratum_class(g, mu)?;
    if reduce {
        class = class.reduce_lambda_even();
    }
    let doc = OutputDocument::new("stratum-class")
        .input("g", json!(g))
        .input("mu", output::partition(mu))
        .input("reduce", json!(reduce));
    Ok(class_doc(doc, &class, g - 1, reduce))
}

fn stratum_divisor_cmd(g: u32, interior: bool) -> Result<OutputDocument, CliError> {
    let class = if interior {
        stratum_divisor_interior(g)?
    } else {
        stratum_divisor_full(g)?
    };
    let mut doc = OutputDocument::new("stratum-divisor")
        .input("g", json!(g))
        .input("interior", json!(interior));
    doc.result = json!({ "class": output::divisor_class(&class), "notes": [SIGN_CONVENTION_NOTE] });
    doc.text.push(class.to_string());
    doc.text.push(format!("note: {SIGN_CONVENTION_NOTE}"));
    Ok(doc)
}

fn pair_cmd(
    ctx: &Context,
    g: Option<u32>,
    curve: Option<&str>,
    fixture: Option<&str>,
    interior: bool,
) -> Result<OutputDocument, CliError> {
    let test_curve = match (curve, fixture) {
        (Some(text), _) => {
            let g = g.ok_or_else(|| CliError::Usage("--curve needs --g".into()))?;
            let vals = parse_q_list(text).map_err(CliError::Usage)?;
            if vals.len() < 3 {
                return Err(CliError::Usage(
                    "--curve expects ψ,λ,δ0,…,δ⌊g/2⌋".into(),
                ));
            }
            TestCurveNumbers::new(g, vals[0].clone(), vals[1].clone(), vals[2..].to_vec())?
        }
        (None, Some("plane-quartic-pencil" | "plane-cubic-pencil")) => {
            let b = TestCurveNumbers::plane_quartic_pencil();
            if let Some(g) = g.filter(|&g| g != b.g) {
                return Err(CliError::Domain(format!("the plane quartic pencil has genus 3, not {g}")));
            }
            b
        }
        (None, Some("canonical-pencil")) => {
            let g = g.ok_or_else(|| CliError::Usage("canonical-pencil needs --g".into()))?;
            TestCurveNumbers::canonical_pencil(g)?
        }
        (None, Some(other)) => {
            return Err(CliError::Usage(format!("unknown fixture {other:?}")));
        }
        (None, None) => return Err(CliError::Usage("give --curve or --fixture".into())),
    };
    let g = test_curve.g;
    let class = if interior {
        stratum_divisor_interior(g)?
    } else {
        stratum_divisor_full(g)?
    };
    let value = pair(&class, &test_curve)?;

    let mut curve_vals = vec![test_curve.psi.clone(), test_curve.lambda.clone()];
    curve_vals.extend(test_curve.delta.iter().cloned());
    let mut doc = OutputDocument::new("pair")
        .input("g", json!(g))
        .input("curve", output::q_list(&curve_vals))
        .input("interior", json!(interior));
    if let Some(f) = fixture {
        doc = doc.input("fixture", json!(f));
    }
    doc.result = json!({ "divisor": output::divisor_class(&class), "pairing": q(&value) });
    doc.text.push(fmt_q(&value, ctx.approx));
    Ok(doc)
}

fn parse_divisor(text: &str, n_parts: usize) -> Result<MgnDivisor, CliError> {
    let vals = parse_q_list(text).map_err(CliError::Usage)?;
    if vals.len() < 2 {
        return Err(CliError::Usage("--divisor expects a,b1,…,bk,c".into()));
    }
    let b = vals[1..vals.len() - 1].to_vec();
    if b.len() > n_parts {
        return Err(CliError::Domain(format!(
            "divisor has {} ω coefficients but μ has {n_parts} parts",
            b.len()
        )));
    }
    Ok(MgnDivisor {
        a: vals[0].clone(),
        b,
        c: vals[vals.len() - 1].clone(),
        other: OtherBoundary::Absent,
    })
}

fn ratios_cmd(
    ctx: &Context,
    g: u32,
    mu: &Partition,
    l: &Rational,
    divisor: Option<&str>,
    chi_half: Option<&Rational>,
) -> Result<OutputDocument, CliError> {
    let mut curve = TeichCurve::new(g, mu.clone(), l.clone(), LyapunovKind::Exact)?;
    if let Some(s) = chi_half {
        curve = curve.with_chi_half(s.clone())?;
    }
    let r = curve_ratios(&curve)?;
    let b = slope_and_bounds(&curve)?;
    let unit = if chi_half.is_some() { "" } else { " (per unit χ/2)" };

    let mut doc = OutputDocument::new("ratios")
        .input("g", json!(g))
        .input("mu", output::partition(mu))
        .input("L", q(l));
    if let Some(s) = chi_half {
        doc = doc.input("chi_half", q(s));
    }
    let fq = |x: &Rational| fmt_q(x, ctx.approx);
    doc.text.push(format!("κ_μ = {}", fq(&curve.kappa())));
    doc.text.push(format!("C·λ = {}{unit}", fq(&r.lambda)));
    doc.text.push(format!("C·δ0 = {}{unit}", fq(&r.delta0)));
    for (i, w) in r.omega.iter().enumerate() {
        doc.text.push(format!("C·ω{} = {}{unit}", i + 1, fq(w)));
    }
    doc.text.push(format!("slope = {} (bound {})", fq(&b.slope), fq(&b.slope_bound)));
    doc.text.push(format!("L = {} (bound {})", fq(l), fq(&b.lyapunov_bound)));
    doc.text.push(format!("bounds satisfied: {}", b.ok));

    let mut result = json!({
        "kappa": q(&curve.kappa()),
        "lambda": q(&r.lambda),
        "delta0": q(&r.delta0),
        "omega": output::q_list(&r.omega),
        "slope": q(&b.slope),
        "slope_bound": q(&b.slope_bound),
        "lyapunov_bound": q(&b.lyapunov_bound),
        "bounds_ok": b.ok,
        "per_unit_chi_half": chi_half.is_none(),
    });
    if let Some(text) = divisor {
        let d = parse_divisor(text, mu.len())?;
        let ratio = intersect_ratio(&d, &curve)?;
        doc = doc.input("divisor", json!(text));
        doc.text.push(format!("C·D / C·λ = {}", fq(&ratio)));
        result["divisor_ratio"] = q(&ratio);
    }
    doc.result = result;
    Ok(doc)
}

#[allow(clippy::too_many_arguments)]
fn certify_cmd(
    ctx: &Context,
    case: Option<&str>,
    g: Option<u32>,
    a: Option<&Partition>,
    l: Option<&Rational>,
    kind: Option<&str>,
    epsilon: Option<&Rational>,
    s: Option<&Rational>,
) -> Result<OutputDocument, CliError> {
    let mut doc = OutputDocument::new("certify");
    let cc = match case {
        Some(name) => {
            let (table, source) = ctx.table()?;
            let row = table.get(name)?;
            doc = doc.input("case", json!(name)).input("table", json!(source));
            doc.citations.push(row.citation.clone());
            CertifyCase::from_row(row)?
        }
        None => {
            let missing = |f: &str| CliError::Usage(format!("certify needs --case or --{f}"));
            let g = g.ok_or_else(|| missing("g"))?;
            let a = a.ok_or_else(|| missing("a"))?;
            let l = l.ok_or_else(|| missing("L"))?;
            let kind: LyapunovKind = kind.ok_or_else(|| missing("kind"))?.parse()?;
            doc = doc
                .input("g", json!(g))
                .input("a", output::partition(a))
                .input("L", q(l))
                .input("kind", json!(kind.as_str()));
            let mu = a.pad_ones((g as usize).saturating_sub(2));
            CertifyCase::new(format!("BN1_{g}({a}) via H({mu})"), g, a.clone(), mu, l.clone(), kind)?
        }
    };
    let s = s.cloned().unwrap_or_else(|| int(0));
    doc = doc.input("s", q(&s));
    if let Some(e) = epsilon {
        doc = doc.input("epsilon", q(e));
    }
    let rep = certify(&cc, epsilon, &s)?;

    let fq = |x: &Rational| fmt_q(x, ctx.approx);
    doc.text.push(format!("case: {}", rep.description));
    doc.text.push(format!("verdict: {}", rep.verdict.as_str()));
    doc.text.push(format!("C·BN / C·λ = {}", fq(&rep.bn_ratio)));
    doc.text.push(format!("ε = {}", fq(&rep.epsilon)));
    doc.text.push(format!("d = {}", fq(&rep.bound_d)));
    doc.text.push(format!("slope = {} (bound {})", fq(&rep.slope), fq(&rep.slope_bound)));
    doc.text.push(format!("L = {} (bound {})", fq(&cc.curve.l), fq(&rep.lyapunov_bound)));
    for c in &rep.caveats {
        doc.text.push(format!("caveat: {c}"));
    }
    doc.result = json!({
        "case": rep.description,
        "verdict": rep.verdict.as_str(),
        "bn_ratio": q(&rep.bn_ratio),
        "epsilon": q(&rep.epsilon),
        "bound_d": q(&rep.bound_d),
        "slope": q(&rep.slope),
        "slope_bound": q(&rep.slope_bound),
        "lyapunov_bound": q(&rep.lyapunov_bound),
        "caveats": rep.caveats,
    });
    Ok(doc)
}

fn table_json(table: &LyapunovTable) -> Value {
    Value::Array(
        table
            .rows()
            .iter()
            .map(|r| {
                json!({
                    "case": r.name,
                    "g": r.g,
                    "a": output::partition(&r.a),
                    "mu": output::partition(&r.mu),
                    "L": q(&r.l),
                    "kind": r.kind.as_str(),
                    "target": r.target,
                    "citation": r.citation,
                })
            })
            .collect(),
    )
}

fn table_cmd(ctx: &Context) -> Result<OutputDocument, CliError> {
    let (table, source) = ctx.table()?;
    let mut doc = OutputDocument::new("table").input("table", json!(source));
    doc.result = json!({ "rows": table_json(&table) });
    doc.citations = table.rows().iter().map(|r| r.citation.clone()).collect();
    doc.text.push(format!(
        "{:<12} {:>2}  {:<7} {:<8} {:<14} {:<6} {}",
        "case", "g", "a", "mu", "L", "kind", "target"
    ));
    for r in table.rows() {
        doc.text.push(format!(
            "{:<12} {:>2}  {:<7} {:<8} {:<14} {:<6} {}",
            r.name,
            r.g,
            r.a.to_string(),
            r.mu.to_string(),
            fmt_q(&r.l, ctx.approx),
            r.kind.as_str(),
            r.target
        ));
    }
    Ok(doc)
}
