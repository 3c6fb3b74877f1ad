//! Curvature tensor, Ricci tensors and their associated starred
//! quantities, scalar curvatures, and sectional curvatures of the basic
//! coordinate planes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{Poly, Rational};
use crate::hnstruct::{HNFrame, Plane, PlaneType};
use crate::liealg::{Constraint, LieAlgebraSpec};
use crate::tensorcalc::{indices, levi_civita, pair_with_basis, ComponentTensor, Connection};
use crate::{Error, Result, DIM};

/// Curvature (0,4)-tensor R_{ijkl} = g(R(e_i, e_j) e_k, e_l) with
/// R(x, y) z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z.
pub fn riemann(conn: &Connection, alg: &LieAlgebraSpec, frame: &HNFrame) -> ComponentTensor {
    let vars = conn.vars().clone();
    let mut r = ComponentTensor::zeros(&vars, 4);
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let second = conn.nabla_vec(i, &conn.nabla_basis(j, k));
                let first = conn.nabla_vec(j, &conn.nabla_basis(i, k));
                // nabla_{[e_i, e_j]} e_k with polynomial bracket coefficients.
                let bracket = alg.bracket_of_basis(i, j);
                let mut v: [Poly; 4] = std::array::from_fn(|m| &second[m] - &first[m]);
                for m in 0..DIM {
                    if bracket.0[m].is_zero() {
                        continue;
                    }
                    for l in 0..DIM {
                        let gamma = conn.gamma(m, k, l);
                        if !gamma.is_zero() {
                            v[l] = &v[l] - &(&bracket.0[m] * gamma);
                        }
                    }
                }
                for l in 0..DIM {
                    r.set(&[i, j, k, l], pair_with_basis(frame.metric(), &v, l, &vars));
                }
            }
        }
    }
    r
}

/// Ricci tensor, associated Ricci tensors, and all scalar curvatures.
#[derive(Clone, Debug)]
pub struct CurvatureBundle {
    pub r: ComponentTensor,
    pub rho: ComponentTensor,
    /// rho*_alpha(y, z) = g^{ij} R(e_i, y, z, J_alpha e_j), one per alpha.
    pub rho_star: [ComponentTensor; 3],
    pub tau: Poly,
    pub tau_star: [Poly; 3],
    pub tau_star_star: [Poly; 3],
}

/// Contracts the curvature tensor into rho, rho*_alpha, tau, tau*_alpha and
/// tau**_alpha:
///
/// ```text
/// rho(y,z)  = g^{ij} R(e_i, y, z, e_j)       tau  = g^{ij} rho(e_i, e_j)
/// rho*(y,z) = g^{ij} R(e_i, y, z, J e_j)     tau* = g^{ij} rho*(e_i, e_j)
/// tau** = g^{ij} rho*(e_i, J e_j)
/// ```
pub fn ricci_and_scalars(r: &ComponentTensor, frame: &HNFrame) -> CurvatureBundle {
    assert_eq!(r.rank(), 4);
    let vars = r.vars().clone();
    let ginv = frame.metric_inv();

    let rho = ComponentTensor::from_fn(&vars, 2, |idx| {
        let (y, z) = (idx[0], idx[1]);
        let mut acc = Poly::zero(&vars);
        for i in 0..DIM {
            for j in 0..DIM {
                if !ginv.at(i, j).is_zero() {
                    let c = r.get(&[i, y, z, j]);
                    if !c.is_zero() {
                        acc = &acc + &c.scale(ginv.at(i, j));
                    }
                }
            }
        }
        acc
    });

    let rho_star: [ComponentTensor; 3] = std::array::from_fn(|a| {
        let jm = frame.j(a + 1);
        ComponentTensor::from_fn(&vars, 2, |idx| {
            let (y, z) = (idx[0], idx[1]);
            let mut acc = Poly::zero(&vars);
            for i in 0..DIM {
                for j in 0..DIM {
                    if ginv.at(i, j).is_zero() {
                        continue;
                    }
                    for m in 0..DIM {
                        let jc = jm.at(m, j);
                        if !jc.is_zero() {
                            let c = r.get(&[i, y, z, m]);
                            if !c.is_zero() {
                                acc = &acc + &c.scale(&(ginv.at(i, j) * jc));
                            }
                        }
                    }
                }
            }
            acc
        })
    });

    let trace = |t: &ComponentTensor| -> Poly {
        let mut acc = Poly::zero(&vars);
        for i in 0..DIM {
            for j in 0..DIM {
                if !ginv.at(i, j).is_zero() {
                    let c = t.get(&[i, j]);
                    if !c.is_zero() {
                        acc = &acc + &c.scale(ginv.at(i, j));
                    }
                }
            }
        }
        acc
    };
    let tau = trace(&rho);
    let tau_star: [Poly; 3] = std::array::from_fn(|a| trace(&rho_star[a]));
    let tau_star_star: [Poly; 3] = std::array::from_fn(|a| {
        let jm = frame.j(a + 1);
        let mut acc = Poly::zero(&vars);
        for i in 0..DIM {
            for j in 0..DIM {
                if ginv.at(i, j).is_zero() {
                    continue;
                }
                for m in 0..DIM {
                    let jc = jm.at(m, j);
                    if !jc.is_zero() {
                        let c = rho_star[a].get(&[i, m]);
                        if !c.is_zero() {
                            acc = &acc + &c.scale(&(ginv.at(i, j) * jc));
                        }
                    }
                }
            }
        }
        acc
    });

    CurvatureBundle {
        r: r.clone(),
        rho,
        rho_star,
        tau,
        tau_star,
        tau_star_star,
    }
}

/// Sectional curvature of a basic plane,
/// k = R(e_i, e_j, e_j, e_i) / (g_ii g_jj - g_ij^2).
pub fn sectional(r: &ComponentTensor, frame: &HNFrame, plane: Plane) -> Result<Poly> {
    let gram = frame.gram(plane);
    if gram.is_zero() {
        return Err(Error::DegeneratePlane(plane.i, plane.j));
    }
    let (i, j) = (plane.i - 1, plane.j - 1);
    let numerator = r.get(&[i, j, j, i]);
    Ok(numerator.scale(&(Rational::from_integer(BigInt::one()) / gram)))
}

/// Sectional curvatures of all six basic planes with their plane types.
#[derive(Clone, Debug)]
pub struct SectionalTable {
    pub entries: Vec<SectionalEntry>,
}

#[derive(Clone, Debug)]
pub struct SectionalEntry {
    pub plane: Plane,
    pub value: Poly,
    /// Plane type relative to J_1, J_2, J_3.
    pub types: [PlaneType; 3],
}

pub fn sectional_table(r: &ComponentTensor, frame: &HNFrame) -> Result<SectionalTable> {
    let mut entries = Vec::new();
    for plane in Plane::basic_planes() {
        let value = sectional(r, frame, plane)?;
        let types = [
            frame.plane_type(plane, 1)?,
            frame.plane_type(plane, 2)?,
            frame.plane_type(plane, 3)?,
        ];
        entries.push(SectionalEntry {
            plane,
            value,
            types,
        });
    }
    Ok(SectionalTable { entries })
}

/// Outcome of asking whether a symbolic quantity can vanish on the real
/// parameter domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Vanishing {
    IdenticallyZero,
    /// Provably nonvanishing on the domain, with the inspection rule used.
    NeverZero { reason: String },
    /// Vanishes exactly where all listed (normalized) polynomials vanish.
    Conditions(Vec<Poly>),
}

/// Decides non-vanishing by the inspection rules that cover the catalog:
/// nonzero constants; polynomials with same-sign coefficients, even
/// exponents and a constant term; and monomials whose variables are all
/// protected by `!= 0` domain constraints.
pub fn vanishing_analysis(p: &Poly, constraints: &[Constraint]) -> Vanishing {
    if p.is_zero() {
        return Vanishing::IdenticallyZero;
    }
    if let Some(c) = p.as_constant() {
        return Vanishing::NeverZero {
            reason: format!(
                "equals the nonzero constant {}",
                crate::exactalg::format_rational(&c)
            ),
        };
    }
    let has_constant_term = p.terms().any(|(m, _)| m.degree() == 0);
    let all_even = p.terms().all(|(m, _)| m.0.iter().all(|e| e % 2 == 0));
    let all_positive = p.terms().all(|(_, c)| c.is_positive());
    let all_negative = p.terms().all(|(_, c)| c.is_negative());
    if has_constant_term && all_even && (all_positive || all_negative) {
        let sign = if all_positive { "positive" } else { "negative" };
        return Vanishing::NeverZero {
            reason: format!("sum of {sign} even-power terms with a {sign} constant term"),
        };
    }
    // Monomial in variables that the domain keeps away from zero.
    if p.terms().count() == 1 {
        let (m, _) = p.terms().next().unwrap();
        let protected = m.0.iter().enumerate().all(|(i, &e)| {
            if e == 0 {
                return true;
            }
            let name = &p.vars().names()[i];
            constraints.iter().any(|c| match c {
                Constraint::NonZero(q) => {
                    q.normalized() == Poly::var(p.vars(), name).unwrap().normalized()
                }
                Constraint::NonNegative(_) => false,
            })
        });
        if protected {
            return Vanishing::NeverZero {
                reason: "monomial in parameters constrained to be nonzero".to_string(),
            };
        }
    }
    Vanishing::Conditions(vec![p.normalized()])
}

/// Sign of an exact value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// One scalar quantity of the report: the symbolic value, its vanishing
/// analysis, and (in point mode) the exact evaluated value.
#[derive(Clone, Debug)]
pub struct ScalarInfo {
    pub name: String,
    pub value: Poly,
    pub vanishing: Vanishing,
    pub at_value: Option<Rational>,
}

/// Structured record of flatness, scalar-curvature behaviour and sectional
/// signs, symbolic or at a parameter point.
#[derive(Clone, Debug)]
pub struct CurvatureReport {
    pub flat: bool,
    /// A curvature component that witnesses non-flatness on the whole
    /// domain, when one is found by inspection.
    pub nonflat_witness: Option<(String, String)>,
    pub tau: ScalarInfo,
    pub tau_star: Vec<ScalarInfo>,
    pub tau_star_star: Vec<ScalarInfo>,
    pub sectional: Vec<(SectionalEntry, Option<Rational>)>,
}

/// Evaluates the curvature bundle into a report; `at` must satisfy the
/// algebra's domain constraints.
pub fn curvature_report(
    alg: &LieAlgebraSpec,
    frame: &HNFrame,
    at: Option<&BTreeMap<String, Rational>>,
) -> Result<CurvatureReport> {
    let conn = levi_civita(alg, frame);
    let r = riemann(&conn, alg, frame);
    let bundle = ricci_and_scalars(&r, frame);
    let table = sectional_table(&r, frame)?;
    report_from_parts(alg, &bundle, &table, at)
}

/// Builds the report from an already-computed bundle (shared with the
/// aggregated analysis to avoid recomputation).
pub fn report_from_parts(
    alg: &LieAlgebraSpec,
    bundle: &CurvatureBundle,
    table: &SectionalTable,
    at: Option<&BTreeMap<String, Rational>>,
) -> Result<CurvatureReport> {
    if let Some(assignment) = at {
        alg.check_constraints(assignment)?;
    }
    let constraints = alg.constraints();
    let scalar = |name: &str, p: &Poly| -> Result<ScalarInfo> {
        Ok(ScalarInfo {
            name: name.to_string(),
            value: p.clone(),
            vanishing: vanishing_analysis(p, constraints),
            at_value: at.map(|asgn| p.eval(asgn)).transpose()?,
        })
    };

    let flat = bundle.r.is_zero();
    let mut nonflat_witness = None;
    if !flat {
        for (idx, value) in bundle.r.nonzero() {
            if let Vanishing::NeverZero { reason } = vanishing_analysis(value, constraints) {
                let name = format!(
                    "R_{}{}{}{}",
                    idx[0] + 1,
                    idx[1] + 1,
                    idx[2] + 1,
                    idx[3] + 1
                );
                nonflat_witness = Some((name, reason));
                break;
            }
        }
    }

    let tau = scalar("tau", &bundle.tau)?;
    let tau_star = (0..3)
        .map(|a| scalar(&format!("tau*_{}", a + 1), &bundle.tau_star[a]))
        .collect::<Result<Vec<_>>>()?;
    let tau_star_star = (0..3)
        .map(|a| scalar(&format!("tau**_{}", a + 1), &bundle.tau_star_star[a]))
        .collect::<Result<Vec<_>>>()?;

    let mut sectional = Vec::new();
    for entry in &table.entries {
        let at_value = at.map(|asgn| entry.value.eval(asgn)).transpose()?;
        sectional.push((entry.clone(), at_value));
    }

    Ok(CurvatureReport {
        flat,
        nonflat_witness,
        tau,
        tau_star,
        tau_star_star,
        sectional,
    })
}

/// Structural identity checks for the curvature tensor.
pub mod identities {
    use super::*;

    /// Antisymmetry in the first and last index pairs, plus the first
    /// Bianchi identity.
    pub fn r_properties(r: &ComponentTensor) -> bool {
        for idx in indices(4) {
            let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
            let v = r.get(&[i, j, k, l]);
            if v != &r.get(&[j, i, k, l]).negated() {
                return false;
            }
            if v != &r.get(&[i, j, l, k]).negated() {
                return false;
            }
            let bianchi =
                &(r.get(&[i, j, k, l]) + r.get(&[j, k, i, l])) + r.get(&[k, i, j, l]);
            if !bianchi.is_zero() {
                return false;
            }
        }
        true
    }

    /// Pair-interchange symmetry R_{ijkl} = R_{klij}; a consequence of the
    /// antisymmetries and Bianchi, checked independently.
    pub fn block_symmetry(r: &ComponentTensor) -> bool {
        for idx in indices(4) {
            let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
            if r.get(&[i, j, k, l]) != r.get(&[k, l, i, j]) {
                return false;
            }
        }
        true
    }
}
