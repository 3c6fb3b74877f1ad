//! Plain-text rendering of analysis results, mirroring the usual
//! presentation: independent nonzero components plus the symmetry rule
//! that folds the duplicates.

use std::collections::BTreeMap;

use hnlab_core::classify::{classification_table, StratumPredicate};
use hnlab_core::curvature::Vanishing;
use hnlab_core::exactalg::{format_rational, Poly, Rational};
use hnlab_core::hnstruct::HNFrame;
use hnlab_core::liealg::LieAlgebraSpec;
use hnlab_core::tensorcalc::ComponentTensor;
use hnlab_core::verify::{compute, fold_components, Computed, TensorSymmetry};

type Assignment = BTreeMap<String, Rational>;

fn subscript(idx: &[usize]) -> String {
    idx.iter().map(|i| (i + 1).to_string()).collect()
}

fn value_str(p: &Poly, at: Option<&Assignment>) -> String {
    match at {
        Some(asgn) => format_rational(&p.eval(asgn).expect("assignment covers parameters")),
        None => p.to_string(),
    }
}

fn fold_section(
    out: &mut String,
    label: &str,
    tensor: &ComponentTensor,
    frame: &HNFrame,
    sym: TensorSymmetry,
    at: Option<&Assignment>,
) {
    let folded = fold_components(tensor, frame, sym);
    let mut lines = Vec::new();
    for (idx, value) in &folded {
        let shown = value_str(value, at);
        if shown != "0" {
            lines.push(format!("  ({label})_{} = {shown}", subscript(idx)));
        }
    }
    if lines.is_empty() {
        out.push_str(&format!("  {label} = 0\n"));
    } else {
        out.push_str(&lines.join("\n"));
        out.push('\n');
    }
}

/// Linear conditions are rewritten in solved form (`a = -2*b`); anything of
/// higher degree stays as `p = 0`.
fn condition_text(p: &Poly) -> String {
    let zero = Rational::from_integer(0.into());
    if p.total_degree() == 1 {
        if let Some((coeffs, constant)) = p.linear_parts() {
            let names = p.vars().names();
            if let Some(pick) = coeffs.iter().position(|c| *c != zero) {
                let inv = Rational::from_integer(1.into()) / coeffs[pick].clone();
                let mut rhs = Poly::constant(p.vars(), -&constant * &inv);
                for (i, c) in coeffs.iter().enumerate() {
                    if i != pick && *c != zero {
                        let var = Poly::var(p.vars(), &names[i]).expect("known variable");
                        rhs = &rhs + &var.scale(&(-c * &inv));
                    }
                }
                return format!("{} = {rhs}", names[pick]);
            }
        }
    }
    format!("{p} = 0")
}

fn vanishing_note(v: &Vanishing) -> String {
    match v {
        Vanishing::IdenticallyZero => "identically zero".to_string(),
        Vanishing::NeverZero { reason } => format!("never zero: {reason}"),
        Vanishing::Conditions(cs) => {
            let list: Vec<String> = cs.iter().map(condition_text).collect();
            format!("vanishes exactly on: {}", list.join(", "))
        }
    }
}

/// Full text report for one algebra, symbolic or at a point.
pub fn text_report(
    alg: &LieAlgebraSpec,
    computed: &Computed,
    at: Option<&Assignment>,
) -> hnlab_core::Result<String> {
    let frame = &computed.frame;
    let mut out = String::new();

    out.push_str(&format!("Algebra {}\n", alg.name()));
    for (i, j, coeffs) in alg.bracket_entries() {
        out.push_str(&format!(
            "  {}\n",
            hnlab_core::analysis::bracket_string(i, j, &coeffs)
        ));
    }
    if !alg.constraints().is_empty() {
        let cs: Vec<String> = alg.constraints().iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("  domain: {}\n", cs.join(", ")));
    }
    match at {
        Some(asgn) => {
            let vals: Vec<String> = asgn
                .iter()
                .map(|(k, v)| format!("{k} = {}", format_rational(v)))
                .collect();
            out.push_str(&format!("Point mode: {}\n\n", vals.join(", ")));
        }
        None => out.push_str("Symbolic mode\n\n"),
    }

    out.push_str("Levi-Civita connection (nonzero nabla_(e_i) e_j = Gamma_ij^k e_k):\n");
    let mut any = false;
    for i in 0..hnlab_core::DIM {
        for j in 0..hnlab_core::DIM {
            for k in 0..hnlab_core::DIM {
                let gamma = computed.tensors.connection.gamma(i, j, k);
                if !gamma.is_zero() {
                    let shown = value_str(gamma, at);
                    if shown != "0" {
                        out.push_str(&format!(
                            "  Gamma_{}{}^{} = {shown}\n",
                            i + 1,
                            j + 1,
                            k + 1
                        ));
                        any = true;
                    }
                }
            }
        }
    }
    if !any {
        out.push_str("  flat: all Gamma vanish\n");
    }

    out.push_str(
        "\nFundamental tensors (independent nonzero components; the rest follow\nfrom F(x,y,z) = -eps F(x,z,y) = -eps F(x,Jy,Jz)):\n",
    );
    for alpha in 1..=3usize {
        fold_section(
            &mut out,
            &format!("F{alpha}"),
            &computed.tensors.f[alpha - 1],
            frame,
            TensorSymmetry::Fundamental(alpha),
            at,
        );
    }

    out.push_str("\nLee forms:\n");
    for alpha in 1..=3usize {
        let theta = &computed.tensors.theta[alpha - 1];
        let comps: Vec<String> = (0..hnlab_core::DIM)
            .map(|i| value_str(theta.get(&[i]), at))
            .collect();
        out.push_str(&format!("  theta{alpha} = ({})\n", comps.join(", ")));
    }

    out.push_str(
        "\nNijenhuis tensors (independent nonzero components; the rest follow\nfrom N(x,y) = -N(y,x) = -N(Jx,Jy)):\n",
    );
    for alpha in 1..=3usize {
        fold_section(
            &mut out,
            &format!("N{alpha}"),
            &computed.tensors.nijenhuis[alpha - 1],
            frame,
            TensorSymmetry::Nijenhuis(alpha),
            at,
        );
    }

    out.push_str(
        "\nCurvature tensor (independent nonzero components; the rest follow\nfrom the antisymmetries and the pair-interchange symmetry):\n",
    );
    fold_section(
        &mut out,
        "R",
        &computed.bundle.r,
        frame,
        TensorSymmetry::Riemann,
        at,
    );

    out.push_str("\nRicci tensor (independent nonzero components, symmetric):\n");
    fold_section(
        &mut out,
        "rho",
        &computed.bundle.rho,
        frame,
        TensorSymmetry::Transpose,
        at,
    );
    out.push_str("\nAssociated Ricci tensors:\n");
    for alpha in 1..=3usize {
        fold_section(
            &mut out,
            &format!("rho*{alpha}"),
            &computed.bundle.rho_star[alpha - 1],
            frame,
            TensorSymmetry::Transpose,
            at,
        );
    }

    out.push_str("\nScalar curvatures:\n");
    let constraints = alg.constraints();
    let mut scalar_line = |name: &str, p: &Poly| {
        let shown = value_str(p, at);
        match at {
            Some(_) => out.push_str(&format!("  {name} = {shown}\n")),
            None => {
                let note = vanishing_note(&hnlab_core::curvature::vanishing_analysis(
                    p,
                    constraints,
                ));
                out.push_str(&format!("  {name} = {shown}   [{note}]\n"));
            }
        }
    };
    scalar_line("tau", &computed.bundle.tau);
    for alpha in 1..=3usize {
        scalar_line(&format!("tau*_{alpha}"), &computed.bundle.tau_star[alpha - 1]);
    }
    for alpha in 1..=3usize {
        scalar_line(
            &format!("tau**_{alpha}"),
            &computed.bundle.tau_star_star[alpha - 1],
        );
    }

    out.push_str("\nSectional curvatures of the basic planes (types w.r.t. J1, J2, J3):\n");
    for entry in &computed.table.entries {
        let types: Vec<String> = entry.types.iter().map(|t| t.to_string()).collect();
        out.push_str(&format!(
            "  k_{}{} = {}   [{}]\n",
            entry.plane.i,
            entry.plane.j,
            value_str(&entry.value, at),
            types.join(", ")
        ));
    }

    out.push_str("\nBasic-class decomposition:\n");
    for report in computed.reports.iter() {
        let minimal = match at {
            Some(asgn) => report.minimal_at(asgn)?,
            None => report.minimal.clone(),
        };
        out.push_str(&format!("  J{}: minimal class {minimal}\n", report.alpha));
        for comp in &report.components {
            if comp.conditions.is_empty() {
                out.push_str(&format!("      {}: component identically zero\n", comp.class));
            } else if comp.conditions.iter().any(|c| c.as_constant().is_some()) {
                out.push_str(&format!(
                    "      {}: never vanishes (a coordinate is a nonzero constant)\n",
                    comp.class
                ));
            } else {
                let cs: Vec<String> = comp.conditions.iter().map(|c| c.to_string()).collect();
                out.push_str(&format!(
                    "      {}: vanishes exactly on {{{}}}\n",
                    comp.class,
                    cs.join(", ")
                ));
            }
        }
    }

    // The parameter-plane stratification, for symbolic two-parameter runs.
    if at.is_none() && alg.vars().len() == 2 {
        let table = classification_table(alg, frame)?;
        out.push_str("\nClassification table (strata of the parameter plane):\n");
        let names = alg.vars().names();
        for stratum in &table.strata {
            let predicate = match &stratum.predicate {
                StratumPredicate::Point(a, b) => format!(
                    "{} = {}, {} = {}",
                    names[0],
                    format_rational(a),
                    names[1],
                    format_rational(b)
                ),
                StratumPredicate::Curve {
                    condition,
                    solved,
                    excluded,
                } => {
                    let mut s = match solved {
                        Some((var, rhs)) => format!("{var} = {rhs}"),
                        None => format!("{condition} = 0"),
                    };
                    if !excluded.is_empty() {
                        let ex: Vec<String> = excluded
                            .iter()
                            .map(|(v, val)| format!("{v} != {}", format_rational(val)))
                            .collect();
                        s.push_str(&format!("  ({})", ex.join(", ")));
                    }
                    s
                }
                StratumPredicate::Generic => "generic (no special condition)".to_string(),
            };
            out.push_str(&format!(
                "  {:<44} J1: {:<10} J2: {:<10} J3: {}\n",
                predicate, stratum.classes[0], stratum.classes[1], stratum.classes[2]
            ));
        }
    }

    let discrepancies = hnlab_core::verify::component_discrepancies(alg, frame)?;
    if !discrepancies.is_empty() {
        out.push_str("\nDiscrepancies against the pinned published values:\n");
        for d in &discrepancies {
            out.push_str(&format!(
                "  {}: published `{}`, computed `{}` ({})\n",
                d.quantity, d.published, d.computed, d.corroborated_by
            ));
        }
    }
    Ok(out)
}

/// Re-exported for `analyze` so main.rs computes the bundle once.
pub fn computed_for(alg: &LieAlgebraSpec) -> hnlab_core::Result<Computed> {
    compute(alg)
}
