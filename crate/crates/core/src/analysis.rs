//! Aggregated analysis of one algebra: connection, structural tensors,
//! curvature, sectional data and basic-class decompositions, in a stable
//! JSON-serializable shape shared by the CLI and the browser demo.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classify::{class_reports, ClassReport};
use crate::curvature::{
    report_from_parts, ricci_and_scalars, riemann, sectional_table, CurvatureReport, ScalarInfo,
    Sign, Vanishing,
};
use crate::exactalg::{format_rational, Poly, Rational};
use crate::hnstruct::{standard_frame, HNFrame};
use crate::liealg::LieAlgebraSpec;
use crate::tensorcalc::{structural_tensors, ComponentTensor};
use crate::{Result, DIM};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSection {
    pub name: String,
    pub brackets: Vec<String>,
    pub constraints: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsSection {
    /// `symbolic` or `point`.
    pub mode: String,
    pub names: Vec<String>,
    /// Exact values in point mode; empty when symbolic.
    pub values: BTreeMap<String, String>,
}

/// One tensor component; indices are 1-based as in the frame notation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub indices: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RicciSection {
    pub rho: Vec<Component>,
    pub rho_star: BTreeMap<String, Vec<Component>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarValue {
    pub value: String,
    /// Sign at the point (point mode only).
    pub sign: Option<String>,
    /// Normalized polynomials whose common zeros are the vanishing locus.
    pub vanishing_conditions: Vec<String>,
    /// Inspection rule proving the quantity never vanishes, when one applies.
    pub never_zero: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarsSection {
    pub tau: ScalarValue,
    pub tau_star: Vec<ScalarValue>,
    pub tau_star_star: Vec<ScalarValue>,
    pub flat: bool,
    pub nonflat_witness: Option<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectionalSection {
    pub plane: [usize; 2],
    pub value: String,
    pub sign: Option<String>,
    /// Plane type w.r.t. J1, J2, J3.
    pub types: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassSection {
    /// Minimal class (at the point in point mode, generic otherwise).
    pub minimal: String,
    /// Per basic class, the vanishing conditions of its component.
    pub conditions: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancySection {
    pub quantity: String,
    pub published: String,
    pub computed: String,
    pub corroborated_by: String,
}

/// The full analysis report. Field order fixes the JSON key order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub algebra: AlgebraSection,
    pub params: ParamsSection,
    pub connection: Vec<Component>,
    #[serde(rename = "F")]
    pub f: BTreeMap<String, Vec<Component>>,
    pub theta: BTreeMap<String, Vec<String>>,
    pub nijenhuis: BTreeMap<String, Vec<Component>>,
    pub riemann: Vec<Component>,
    pub ricci: RicciSection,
    pub scalars: ScalarsSection,
    pub sectional: Vec<SectionalSection>,
    pub classes: BTreeMap<String, ClassSection>,
    pub discrepancies: Vec<DiscrepancySection>,
}

/// Readable form of one bracket entry, e.g. `[e2,e4] = (b)*e2 - e3`.
pub fn bracket_string(i_index: usize, j_index: usize, coeffs: &[Poly; 4]) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(format!("e{}", k + 1));
        } else if c.negated().is_one() {
            parts.push(format!("-e{}", k + 1));
        } else {
            parts.push(format!("({})*e{}", c, k + 1));
        }
    }
    let rhs = if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    };
    format!("[e{i_index},e{j_index}] = {rhs}")
}

/// Renders a polynomial either symbolically or evaluated at the point.
fn render(p: &Poly, at: Option<&BTreeMap<String, Rational>>) -> Result<String> {
    Ok(match at {
        Some(asgn) => format_rational(&p.eval(asgn)?),
        None => p.to_string(),
    })
}

fn is_effectively_zero(p: &Poly, at: Option<&BTreeMap<String, Rational>>) -> Result<bool> {
    Ok(match at {
        Some(asgn) => p.eval(asgn)?.is_zero(),
        None => p.is_zero(),
    })
}

fn tensor_components(
    t: &ComponentTensor,
    at: Option<&BTreeMap<String, Rational>>,
) -> Result<Vec<Component>> {
    let mut out = Vec::new();
    for (idx, p) in t.nonzero() {
        if is_effectively_zero(p, at)? {
            continue;
        }
        out.push(Component {
            indices: idx.iter().map(|i| i + 1).collect(),
            value: render(p, at)?,
        });
    }
    Ok(out)
}

fn scalar_value(info: &ScalarInfo) -> ScalarValue {
    let (vanishing_conditions, never_zero) = match &info.vanishing {
        Vanishing::IdenticallyZero => (Vec::new(), None),
        Vanishing::NeverZero { reason } => (Vec::new(), Some(reason.clone())),
        Vanishing::Conditions(cs) => (cs.iter().map(|c| c.to_string()).collect(), None),
    };
    ScalarValue {
        value: match &info.at_value {
            Some(v) => format_rational(v),
            None => info.value.to_string(),
        },
        sign: info.at_value.as_ref().map(|v| Sign::of(v).to_string()),
        vanishing_conditions,
        never_zero,
    }
}

fn class_section(
    report: &ClassReport,
    at: Option<&BTreeMap<String, Rational>>,
) -> Result<ClassSection> {
    let minimal = match at {
        Some(asgn) => report.minimal_at(asgn)?,
        None => report.minimal.clone(),
    };
    let mut conditions = BTreeMap::new();
    for comp in &report.components {
        conditions.insert(
            comp.class.to_string(),
            comp.conditions.iter().map(|c| c.to_string()).collect(),
        );
    }
    Ok(ClassSection {
        minimal: minimal.to_string(),
        conditions,
    })
}

/// Computes the full analysis. In point mode the assignment must satisfy
/// the algebra's domain constraints, and all reported values are the exact
/// evaluations at the point.
pub fn analyze(
    alg: &LieAlgebraSpec,
    frame: &HNFrame,
    at: Option<&BTreeMap<String, Rational>>,
) -> Result<AnalysisReport> {
    if let Some(asgn) = at {
        alg.check_constraints(asgn)?;
    }
    let tensors = structural_tensors(alg, frame)?;
    let r = riemann(&tensors.connection, alg, frame);
    let bundle = ricci_and_scalars(&r, frame);
    let table = sectional_table(&r, frame)?;
    let curve_report: CurvatureReport = report_from_parts(alg, &bundle, &table, at)?;
    let reports = class_reports(alg, frame)?;

    let algebra = AlgebraSection {
        name: alg.name().to_string(),
        brackets: alg
            .bracket_entries()
            .iter()
            .map(|(i, j, coeffs)| bracket_string(*i, *j, coeffs))
            .collect(),
        constraints: alg.constraints().iter().map(|c| c.to_string()).collect(),
    };
    let params = ParamsSection {
        mode: if at.is_some() { "point" } else { "symbolic" }.to_string(),
        names: alg.vars().names().to_vec(),
        values: at
            .map(|asgn| {
                asgn.iter()
                    .map(|(k, v)| (k.clone(), format_rational(v)))
                    .collect()
            })
            .unwrap_or_default(),
    };

    let mut connection = Vec::new();
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let gamma = tensors.connection.gamma(i, j, k);
                if !gamma.is_zero() && !is_effectively_zero(gamma, at)? {
                    connection.push(Component {
                        indices: vec![i + 1, j + 1, k + 1],
                        value: render(gamma, at)?,
                    });
                }
            }
        }
    }

    let mut f = BTreeMap::new();
    let mut theta = BTreeMap::new();
    let mut nijenhuis = BTreeMap::new();
    let mut rho_star = BTreeMap::new();
    for alpha in 1..=3usize {
        f.insert(
            format!("F{alpha}"),
            tensor_components(&tensors.f[alpha - 1], at)?,
        );
        let theta_vec: Vec<String> = (0..DIM)
            .map(|i| render(tensors.theta[alpha - 1].get(&[i]), at))
            .collect::<Result<_>>()?;
        theta.insert(format!("theta{alpha}"), theta_vec);
        nijenhuis.insert(
            format!("N{alpha}"),
            tensor_components(&tensors.nijenhuis[alpha - 1], at)?,
        );
        rho_star.insert(
            format!("rho_star{alpha}"),
            tensor_components(&bundle.rho_star[alpha - 1], at)?,
        );
    }

    let scalars = ScalarsSection {
        tau: scalar_value(&curve_report.tau),
        tau_star: curve_report.tau_star.iter().map(scalar_value).collect(),
        tau_star_star: curve_report
            .tau_star_star
            .iter()
            .map(scalar_value)
            .collect(),
        flat: curve_report.flat,
        nonflat_witness: curve_report.nonflat_witness.clone(),
    };

    let mut sectional = Vec::new();
    for (entry, at_value) in &curve_report.sectional {
        sectional.push(SectionalSection {
            plane: [entry.plane.i, entry.plane.j],
            value: match at_value {
                Some(v) => format_rational(v),
                None => entry.value.to_string(),
            },
            sign: at_value.as_ref().map(|v| Sign::of(v).to_string()),
            types: entry.types.iter().map(|t| t.to_string()).collect(),
        });
    }

    let mut classes = BTreeMap::new();
    for (alpha, report) in reports.iter().enumerate() {
        classes.insert(format!("J{}", alpha + 1), class_section(report, at)?);
    }

    let discrepancies = crate::verify::component_discrepancies(alg, frame)?
        .into_iter()
        .map(|d| DiscrepancySection {
            quantity: d.quantity,
            published: d.published,
            computed: d.computed,
            corroborated_by: d.corroborated_by,
        })
        .collect();

    Ok(AnalysisReport {
        algebra,
        params,
        connection,
        f,
        theta,
        nijenhuis,
        riemann: tensor_components(&bundle.r, at)?,
        ricci: RicciSection {
            rho: tensor_components(&bundle.rho, at)?,
            rho_star,
        },
        scalars,
        sectional,
        classes,
        discrepancies,
    })
}

/// Analysis of a catalog or user algebra with the standard frame.
pub fn analyze_standard(
    alg: &LieAlgebraSpec,
    at: Option<&BTreeMap<String, Rational>>,
) -> Result<AnalysisReport> {
    analyze(alg, &standard_frame(), at)
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<AnalysisReport> {
        serde_json::from_str(s).map_err(|e| crate::Error::Invalid(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat_int;
    use crate::liealg::catalog;

    #[test]
    fn symbolic_report_contains_the_g45_scalar_curvature() {
        let report = analyze_standard(&catalog::g4_5(), None).unwrap();
        assert_eq!(
            report.scalars.tau.value,
            "2*a^2 + 2*a*b + 2*b^2 + 2*a + 2*b + 2"
        );
        assert_eq!(report.params.mode, "symbolic");
        assert_eq!(report.classes["J1"].minimal, "W2+W4");
        // The single g4_5 source discrepancy: the sign of (N3)_132.
        assert_eq!(report.discrepancies.len(), 1);
        assert_eq!(report.discrepancies[0].quantity, "g4_5 N3_132");
        assert_eq!(report.discrepancies[0].computed, "-a + b");
    }

    #[test]
    fn json_round_trip_is_lossless() {
        let report = analyze_standard(&catalog::g4_5(), None).unwrap();
        let json = report.to_json();
        let back = AnalysisReport::from_json(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn point_report_evaluates_exactly() {
        let at: BTreeMap<String, Rational> = [
            ("a".to_string(), rat_int(1)),
            ("b".to_string(), rat_int(-3)),
        ]
        .into();
        let report = analyze_standard(&catalog::g4_5(), Some(&at)).unwrap();
        assert_eq!(report.params.mode, "point");
        assert_eq!(report.params.values["b"], "-3");
        // Row (1, -3): J2 and J3 both drop to W2+W3.
        assert_eq!(report.classes["J2"].minimal, "W2+W3");
        assert_eq!(report.classes["J3"].minimal, "W2+W3");
        assert_eq!(report.classes["J1"].minimal, "W4");
    }

    #[test]
    fn g46_report_lists_the_published_riemann_discrepancy() {
        let report = analyze_standard(&catalog::g4_6(), None).unwrap();
        assert_eq!(report.discrepancies.len(), 1);
        let d = &report.discrepancies[0];
        assert_eq!(d.quantity, "g4_6 R_3443");
        assert_eq!(d.published, "-b^2 + 2");
        assert_eq!(d.computed, "b^2 - 1");
        assert!(d.corroborated_by.contains("k_34"));
    }

    #[test]
    fn point_report_rejects_domain_violation() {
        let at: BTreeMap<String, Rational> = [
            ("a".to_string(), rat_int(0)),
            ("b".to_string(), rat_int(1)),
        ]
        .into();
        assert!(matches!(
            analyze_standard(&catalog::g4_5(), Some(&at)),
            Err(crate::Error::DomainViolation(_))
        ));
    }
}
