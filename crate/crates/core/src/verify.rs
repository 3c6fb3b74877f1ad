//! Pinned reference values -- every displayed component and theorem claim
//! for the two built-in algebras -- re-checked against the computation.
//!
//! A mismatch between a pinned value and the recomputation is reported with
//! both values. When the computed value is corroborated by an independent
//! pinned quantity that determines the same number (for example a sectional
//! curvature pinning a curvature component), the mismatch is downgraded
//! from a failure to a source discrepancy; the run still reports it.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::classify::{
    class_reports, classification_table, BasicClass, ClassReport, MinimalClass, StratumPredicate,
};
use crate::curvature::{
    identities as rid, ricci_and_scalars, riemann, sectional_table, vanishing_analysis,
    CurvatureBundle, SectionalTable, Sign, Vanishing,
};
use crate::exactalg::{rat, rat_int, Poly, Rational, VarSet};
use crate::hnstruct::{standard_frame, HNFrame, Plane, PlaneType};
use crate::liealg::{catalog, LieAlgebraSpec};
use crate::tensorcalc::{
    identities as tid, structural_tensors, ComponentTensor, StructuralTensors,
};
use crate::{Result, DIM};

/// A pinned value that the recomputation contradicts, with the evidence
/// that the computed side is self-consistent.
#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub quantity: String,
    pub published: String,
    pub computed: String,
    pub corroborated_by: String,
}

#[derive(Clone, Debug)]
pub enum CheckStatus {
    Pass,
    Discrepancy(Discrepancy),
    Fail { expected: String, computed: String },
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub status: CheckStatus,
}

impl CheckResult {
    fn pass(id: impl Into<String>) -> CheckResult {
        CheckResult {
            id: id.into(),
            status: CheckStatus::Pass,
        }
    }

    fn of_bool(id: impl Into<String>, ok: bool, expected: &str, computed: &str) -> CheckResult {
        CheckResult {
            id: id.into(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail {
                    expected: expected.to_string(),
                    computed: computed.to_string(),
                }
            },
        }
    }
}

/// Aggregated verification outcome.
#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Pass))
            .count()
    }

    pub fn failed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Fail { .. }))
            .count()
    }

    pub fn discrepancies(&self) -> Vec<(&str, &Discrepancy)> {
        self.checks
            .iter()
            .filter_map(|c| match &c.status {
                CheckStatus::Discrepancy(d) => Some((c.id.as_str(), d)),
                _ => None,
            })
            .collect()
    }

    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn all_green(&self) -> bool {
        self.failed() == 0
    }
}

/// Everything computed once per algebra.
pub struct Computed {
    pub alg: LieAlgebraSpec,
    pub frame: HNFrame,
    pub tensors: StructuralTensors,
    pub bundle: CurvatureBundle,
    pub table: SectionalTable,
    pub reports: [ClassReport; 3],
}

pub fn compute(alg: &LieAlgebraSpec) -> Result<Computed> {
    let frame = standard_frame();
    let tensors = structural_tensors(alg, &frame)?;
    let r = riemann(&tensors.connection, alg, &frame);
    let bundle = ricci_and_scalars(&r, &frame);
    let table = sectional_table(&r, &frame)?;
    let reports = class_reports(alg, &frame)?;
    Ok(Computed {
        alg: alg.clone(),
        frame,
        tensors,
        bundle,
        table,
        reports,
    })
}

// ---------------------------------------------------------------------------
// Pinned component tables.
// ---------------------------------------------------------------------------

type GoldenEntry = (&'static str, &'static [usize], &'static str);

/// Displayed components for g4_5 (1-based indices).
const G45_COMPONENTS: &[GoldenEntry] = &[
    ("F1", &[1, 1, 3], "1"),
    ("F2", &[1, 1, 2], "1"),
    ("F3", &[1, 1, 1], "-2"),
    ("F1", &[2, 1, 4], "-a"),
    ("F3", &[2, 1, 2], "-a"),
    ("F2", &[2, 2, 2], "2*a"),
    ("F2", &[3, 1, 4], "b"),
    ("F3", &[3, 1, 3], "b"),
    ("theta1", &[3], "a + 1"),
    ("theta2", &[2], "2*a + b + 1"),
    ("theta3", &[1], "-a - b - 2"),
    ("N1", &[1, 3, 2], "1 - a"),
    ("N1", &[2, 3, 1], "1 - a"),
    ("N2", &[1, 2, 3], "1 - b"),
    ("N2", &[2, 3, 1], "1 - b"),
    ("N3", &[1, 2, 3], "a - b"),
    ("N3", &[1, 3, 2], "a - b"),
    ("R", &[1, 2, 2, 1], "a"),
    ("R", &[1, 3, 1, 3], "b"),
    ("R", &[1, 4, 1, 4], "1"),
    ("R", &[2, 3, 2, 3], "a*b"),
    ("R", &[2, 4, 2, 4], "a^2"),
    ("R", &[3, 4, 4, 3], "b^2"),
    ("rho", &[1, 1], "a + b + 1"),
    ("rho", &[2, 2], "a^2 + a*b + a"),
    ("rho", &[3, 3], "-a*b - b^2 - b"),
    ("rho", &[4, 4], "-a^2 - b^2 - 1"),
    ("rho_star1", &[1, 2], "a"),
    ("rho_star1", &[3, 4], "b^2"),
    ("rho_star2", &[1, 3], "b"),
    ("rho_star2", &[2, 4], "a^2"),
    ("rho_star3", &[1, 4], "-1"),
    ("rho_star3", &[2, 3], "a*b"),
];

const G45_SCALARS: &[(&str, &str)] = &[
    ("tau", "2*a^2 + 2*a*b + 2*b^2 + 2*a + 2*b + 2"),
    ("tau*_1", "0"),
    ("tau*_2", "0"),
    ("tau*_3", "0"),
    ("tau**_1", "2*b^2 + 2*a"),
    ("tau**_2", "2*a^2 + 2*b"),
    ("tau**_3", "2*a*b + 2"),
    ("k_12", "a"),
    ("k_13", "b"),
    ("k_14", "1"),
    ("k_23", "a*b"),
    ("k_24", "a^2"),
    ("k_34", "b^2"),
];

/// Displayed components for g4_6. R_3443 is pinned as displayed (2 - b^2)
/// even though other displayed values of the same block contradict it; the
/// comparison logic resolves it through the sectional corroboration.
const G46_COMPONENTS: &[GoldenEntry] = &[
    ("F1", &[3, 2, 3], "1"),
    ("F2", &[2, 2, 3], "1"),
    ("F3", &[2, 1, 3], "-1"),
    ("F3", &[3, 3, 4], "1"),
    ("F2", &[3, 2, 2], "2"),
    ("F1", &[2, 2, 3], "b"),
    ("F2", &[3, 1, 4], "b"),
    ("F3", &[2, 3, 4], "b"),
    ("F3", &[3, 1, 3], "b"),
    ("F2", &[2, 2, 2], "2*b"),
    ("F1", &[1, 1, 3], "a"),
    ("F2", &[1, 1, 2], "a"),
    ("F3", &[1, 1, 1], "-2*a"),
    ("theta1", &[2], "1"),
    ("theta2", &[3], "1"),
    ("theta3", &[4], "-2"),
    ("theta1", &[3], "a + b"),
    ("theta3", &[1], "-2*a - 2*b"),
    ("theta2", &[2], "a + 3*b"),
    ("N1", &[1, 3, 2], "a - b"),
    ("N1", &[2, 3, 1], "a - b"),
    ("N2", &[1, 2, 3], "a - b"),
    ("N2", &[2, 3, 1], "a - b"),
    ("N1", &[1, 3, 3], "-1"),
    ("N1", &[2, 3, 4], "-1"),
    ("N2", &[1, 2, 2], "1"),
    ("N2", &[1, 4, 4], "1"),
    ("R", &[1, 2, 2, 1], "a*b"),
    ("R", &[1, 3, 1, 3], "a*b"),
    ("R", &[1, 2, 3, 1], "a"),
    ("R", &[1, 4, 1, 4], "a^2"),
    ("R", &[2, 3, 2, 3], "b^2 + 1"),
    ("R", &[2, 4, 2, 4], "b^2 - 1"),
    ("R", &[2, 4, 3, 4], "2*b"),
    ("R", &[3, 4, 4, 3], "2 - b^2"),
    ("rho", &[1, 1], "a^2 + 2*a*b"),
    ("rho", &[2, 2], "a*b + 2*b^2"),
    ("rho", &[3, 3], "-a*b - 2*b^2"),
    ("rho", &[2, 3], "a + 2*b"),
    ("rho", &[4, 4], "-a^2 - 2*b^2 + 2"),
    ("rho_star1", &[1, 3], "a"),
    ("rho_star2", &[1, 2], "-a"),
    ("rho_star3", &[1, 1], "2*a"),
    ("rho_star1", &[2, 4], "-2*b"),
    ("rho_star2", &[3, 4], "2*b"),
    ("rho_star3", &[4, 4], "-4*b"),
    ("rho_star1", &[1, 2], "a*b"),
    ("rho_star2", &[1, 3], "a*b"),
    ("rho_star1", &[3, 4], "b^2 - 1"),
    ("rho_star2", &[2, 4], "b^2 - 1"),
    ("rho_star3", &[2, 3], "b^2 + 1"),
    ("rho_star3", &[1, 4], "-a^2"),
];

const G46_SCALARS: &[(&str, &str)] = &[
    ("tau", "2*a^2 + 4*a*b + 6*b^2 - 2"),
    ("tau*_1", "0"),
    ("tau*_2", "0"),
    ("tau*_3", "2*a + 4*b"),
    ("tau**_1", "2*a*b + 2*b^2 - 2"),
    ("tau**_2", "2*a*b + 2*b^2 - 2"),
    ("tau**_3", "2*a^2 + 2*b^2 + 2"),
    ("k_12", "a*b"),
    ("k_13", "a*b"),
    ("k_14", "a^2"),
    ("k_23", "b^2 + 1"),
    ("k_24", "b^2 - 1"),
    ("k_34", "b^2 - 1"),
];

fn component_of<'a>(c: &'a Computed, tensor: &str, idx0: &[usize]) -> &'a Poly {
    match tensor {
        "F1" => c.tensors.f[0].get(idx0),
        "F2" => c.tensors.f[1].get(idx0),
        "F3" => c.tensors.f[2].get(idx0),
        "theta1" => c.tensors.theta[0].get(idx0),
        "theta2" => c.tensors.theta[1].get(idx0),
        "theta3" => c.tensors.theta[2].get(idx0),
        "N1" => c.tensors.nijenhuis[0].get(idx0),
        "N2" => c.tensors.nijenhuis[1].get(idx0),
        "N3" => c.tensors.nijenhuis[2].get(idx0),
        "R" => c.bundle.r.get(idx0),
        "rho" => c.bundle.rho.get(idx0),
        "rho_star1" => c.bundle.rho_star[0].get(idx0),
        "rho_star2" => c.bundle.rho_star[1].get(idx0),
        "rho_star3" => c.bundle.rho_star[2].get(idx0),
        other => panic!("unknown tensor `{other}`"),
    }
}

fn scalar_of(c: &Computed, name: &str) -> Poly {
    let k_of = |i: usize, j: usize| -> Poly {
        c.table
            .entries
            .iter()
            .find(|e| e.plane.i == i && e.plane.j == j)
            .expect("basic plane present")
            .value
            .clone()
    };
    match name {
        "tau" => c.bundle.tau.clone(),
        "tau*_1" => c.bundle.tau_star[0].clone(),
        "tau*_2" => c.bundle.tau_star[1].clone(),
        "tau*_3" => c.bundle.tau_star[2].clone(),
        "tau**_1" => c.bundle.tau_star_star[0].clone(),
        "tau**_2" => c.bundle.tau_star_star[1].clone(),
        "tau**_3" => c.bundle.tau_star_star[2].clone(),
        k if k.starts_with("k_") => {
            let digits: Vec<usize> = k[2..]
                .chars()
                .map(|ch| ch.to_digit(10).unwrap() as usize)
                .collect();
            k_of(digits[0], digits[1])
        }
        other => panic!("unknown scalar `{other}`"),
    }
}

/// For a mismatching pinned R component of the pattern R(e_i,e_j,e_j,e_i),
/// looks for a pinned sectional value that determines the same number; a
/// match corroborates the computed side.
fn sectional_corroboration(
    c: &Computed,
    scalars: &[(&str, &str)],
    idx0: &[usize],
    computed: &Poly,
) -> Option<String> {
    if idx0.len() != 4 || idx0[0] != idx0[3] || idx0[1] != idx0[2] {
        return None;
    }
    let (i, j) = (idx0[0] + 1, idx0[1] + 1);
    let plane = Plane::new(i.min(j), i.max(j)).ok()?;
    let gram = c.frame.gram(plane);
    let key = format!("k_{}{}", plane.i, plane.j);
    let pinned_k = scalars
        .iter()
        .find(|(name, _)| *name == key)
        .map(|(_, v)| Poly::parse(computed.vars(), v).ok())??;
    // R(e_i,e_j,e_j,e_i) = k * gram.
    if pinned_k.scale(&gram) == *computed {
        Some(format!(
            "the pinned sectional value {key} = {pinned_k} determines the same component"
        ))
    } else {
        None
    }
}


/// Builds the full expected F_alpha tensor from the displayed entries by
/// closing them under the signed (FaJ-prop) symmetries. Returns None when
/// the displayed data conflicts with itself.
fn expected_f_closure(
    c: &Computed,
    components: &[GoldenEntry],
    alpha: usize,
) -> Option<BTreeMap<Vec<usize>, Poly>> {
    let vars = c.alg.vars().clone();
    let eps = rat_int(c.frame.eps(alpha));
    let image = |i: usize| c.frame.j_basis_image(alpha, i);
    let mut values: BTreeMap<Vec<usize>, Poly> = BTreeMap::new();
    let mut queue: Vec<(Vec<usize>, Poly)> = Vec::new();
    let name = format!("F{alpha}");
    for (tensor, idx1, expected_str) in components {
        if *tensor != name {
            continue;
        }
        let idx0: Vec<usize> = idx1.iter().map(|i| i - 1).collect();
        queue.push((idx0, Poly::parse(&vars, expected_str).ok()?));
    }
    while let Some((idx, value)) = queue.pop() {
        if let Some(existing) = values.get(&idx) {
            if *existing != value {
                return None;
            }
            continue;
        }
        values.insert(idx.clone(), value.clone());
        // F(x,z,y) = -eps F(x,y,z).
        queue.push((
            vec![idx[0], idx[2], idx[1]],
            value.scale(&-eps.clone()),
        ));
        // F(x,Jy,Jz) = -eps F(x,y,z), with J a signed permutation.
        let (pj, sj) = image(idx[1]);
        let (pk, sk) = image(idx[2]);
        queue.push((
            vec![idx[0], pj, pk],
            value.scale(&(-&eps * rat_int(sj * sk))),
        ));
    }
    Some(values)
}

/// Recomputes one lowered Nijenhuis component from the displayed
/// fundamental-tensor data alone, through
/// N(x,y,z) = F(x,Jy,z) - F(y,Jx,z) + F(Jx,y,z) - F(Jy,x,z).
fn nijenhuis_from_displayed_f(
    c: &Computed,
    components: &[GoldenEntry],
    alpha: usize,
    idx0: &[usize],
) -> Option<Poly> {
    let vars = c.alg.vars().clone();
    let closure = expected_f_closure(c, components, alpha)?;
    let f_at = |i: usize, j: usize, k: usize| -> Poly {
        closure
            .get(&vec![i, j, k])
            .cloned()
            .unwrap_or_else(|| Poly::zero(&vars))
    };
    let image = |i: usize| c.frame.j_basis_image(alpha, i);
    let (i, j, k) = (idx0[0], idx0[1], idx0[2]);
    let (ji, si) = image(i);
    let (jj, sj) = image(j);
    let mut acc = f_at(i, jj, k).scale(&rat_int(sj));
    acc = &acc - &f_at(j, ji, k).scale(&rat_int(si));
    acc = &acc + &f_at(ji, j, k).scale(&rat_int(si));
    acc = &acc - &f_at(jj, i, k).scale(&rat_int(sj));
    Some(acc)
}

fn component_checks(
    c: &Computed,
    components: &[GoldenEntry],
    scalars: &[(&str, &str)],
) -> Vec<CheckResult> {
    let vars = c.alg.vars().clone();
    let mut out = Vec::new();
    for (tensor, idx1, expected_str) in components {
        let idx0: Vec<usize> = idx1.iter().map(|i| i - 1).collect();
        let expected = Poly::parse(&vars, expected_str).expect("pinned value parses");
        let computed = component_of(c, tensor, &idx0);
        let id = format!(
            "{} {}_{}",
            c.alg.name(),
            tensor,
            idx1.iter().map(usize::to_string).collect::<String>()
        );
        let n_alpha = match *tensor {
            "N1" => Some(1usize),
            "N2" => Some(2),
            "N3" => Some(3),
            _ => None,
        };
        if *computed == expected {
            out.push(CheckResult::pass(id));
        } else if let Some(route) = n_alpha
            .and_then(|alpha| nijenhuis_from_displayed_f(c, components, alpha, &idx0))
            .filter(|route| route == computed)
        {
            out.push(CheckResult {
                id: id.clone(),
                status: CheckStatus::Discrepancy(Discrepancy {
                    quantity: id,
                    published: expected.to_string(),
                    computed: computed.to_string(),
                    corroborated_by: format!(
                        "the displayed fundamental-tensor components, closed under their \
                         symmetries, determine this component as {route} through \
                         N(x,y,z) = F(x,Jy,z) - F(y,Jx,z) + F(Jx,y,z) - F(Jy,x,z)"
                    ),
                }),
            });
        } else if let Some(why) = sectional_corroboration(c, scalars, &idx0, computed) {
            out.push(CheckResult {
                id,
                status: CheckStatus::Discrepancy(Discrepancy {
                    quantity: format!(
                        "{} {}_{}",
                        c.alg.name(),
                        tensor,
                        idx1.iter().map(usize::to_string).collect::<String>()
                    ),
                    published: expected.to_string(),
                    computed: computed.to_string(),
                    corroborated_by: why,
                }),
            });
        } else {
            out.push(CheckResult {
                id,
                status: CheckStatus::Fail {
                    expected: expected.to_string(),
                    computed: computed.to_string(),
                },
            });
        }
    }
    for (name, expected_str) in scalars {
        let expected = Poly::parse(&vars, expected_str).expect("pinned value parses");
        let computed = scalar_of(c, name);
        out.push(CheckResult::of_bool(
            format!("{} {}", c.alg.name(), name),
            computed == expected,
            &expected.to_string(),
            &computed.to_string(),
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// Symmetry-orbit support checks ("... and their equal ones by" clauses).
// ---------------------------------------------------------------------------

/// Index symmetry group of a tensor, for orbit generation.
#[derive(Clone, Copy, Debug)]
pub enum TensorSymmetry {
    /// F_alpha: (x,z,y) swap and the (J y, J z) twist.
    Fundamental(usize),
    /// N_alpha: (y,x) swap and the (J x, J y) twist.
    Nijenhuis(usize),
    /// R: both pair antisymmetries and the pair interchange.
    Riemann,
    /// rho and rho*: index transposition.
    Transpose,
    /// No symmetry (Lee forms).
    Exact,
}

/// Generates the index orbit of `seed` under the symmetry group (support
/// only; signs are irrelevant for membership).
pub fn index_orbit(frame: &HNFrame, sym: TensorSymmetry, seed: &[usize]) -> BTreeSet<Vec<usize>> {
    let sigma = |alpha: usize, i: usize| frame.j_basis_image(alpha, i).0;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = vec![seed.to_vec()];
    while let Some(idx) = queue.pop() {
        if !seen.insert(idx.clone()) {
            continue;
        }
        let images: Vec<Vec<usize>> = match sym {
            TensorSymmetry::Fundamental(alpha) => vec![
                vec![idx[0], idx[2], idx[1]],
                vec![idx[0], sigma(alpha, idx[1]), sigma(alpha, idx[2])],
            ],
            TensorSymmetry::Nijenhuis(alpha) => vec![
                vec![idx[1], idx[0], idx[2]],
                vec![sigma(alpha, idx[0]), sigma(alpha, idx[1]), idx[2]],
            ],
            TensorSymmetry::Riemann => vec![
                vec![idx[1], idx[0], idx[2], idx[3]],
                vec![idx[0], idx[1], idx[3], idx[2]],
                vec![idx[2], idx[3], idx[0], idx[1]],
            ],
            TensorSymmetry::Transpose => vec![vec![idx[1], idx[0]]],
            TensorSymmetry::Exact => Vec::new(),
        };
        for im in images {
            if !seen.contains(&im) {
                queue.push(im);
            }
        }
    }
    seen
}

/// Folds a tensor's nonzero components into orbit representatives (smallest
/// index per orbit), the presentation the reports use.
pub fn fold_components(
    tensor: &ComponentTensor,
    frame: &HNFrame,
    sym: TensorSymmetry,
) -> Vec<(Vec<usize>, Poly)> {
    let mut covered: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for (idx, _) in tensor.nonzero() {
        if covered.contains(&idx) {
            continue;
        }
        let orbit = index_orbit(frame, sym, &idx);
        let rep = orbit
            .iter()
            .filter(|i| !tensor.get(i).is_zero())
            .min()
            .cloned()
            .unwrap_or_else(|| idx.clone());
        let rep_value = tensor.get(&rep).clone();
        covered.extend(orbit);
        out.push((rep, rep_value));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

fn support_check(
    c: &Computed,
    tensor_name: &str,
    tensor: &ComponentTensor,
    sym: TensorSymmetry,
    listed: &[Vec<usize>],
) -> CheckResult {
    let mut closure: BTreeSet<Vec<usize>> = BTreeSet::new();
    for idx in listed {
        closure.extend(index_orbit(&c.frame, sym, idx));
    }
    for (idx, _) in tensor.nonzero() {
        if !closure.contains(&idx) {
            let shown: Vec<usize> = idx.iter().map(|i| i + 1).collect();
            return CheckResult::of_bool(
                format!("{} {} support", c.alg.name(), tensor_name),
                false,
                "all nonzero components lie in the displayed orbits",
                &format!("unexpected nonzero component at {shown:?}"),
            );
        }
    }
    CheckResult::pass(format!("{} {} support", c.alg.name(), tensor_name))
}

fn support_checks(c: &Computed, components: &[GoldenEntry]) -> Vec<CheckResult> {
    let listed_for = |name: &str| -> Vec<Vec<usize>> {
        components
            .iter()
            .filter(|(t, _, _)| *t == name)
            .map(|(_, idx1, _)| idx1.iter().map(|i| i - 1).collect())
            .collect()
    };
    let mut out = Vec::new();
    for alpha in 1..=3usize {
        out.push(support_check(
            c,
            &format!("F{alpha}"),
            &c.tensors.f[alpha - 1],
            TensorSymmetry::Fundamental(alpha),
            &listed_for(&format!("F{alpha}")),
        ));
        out.push(support_check(
            c,
            &format!("theta{alpha}"),
            &c.tensors.theta[alpha - 1],
            TensorSymmetry::Exact,
            &listed_for(&format!("theta{alpha}")),
        ));
        out.push(support_check(
            c,
            &format!("N{alpha}"),
            &c.tensors.nijenhuis[alpha - 1],
            TensorSymmetry::Nijenhuis(alpha),
            &listed_for(&format!("N{alpha}")),
        ));
        out.push(support_check(
            c,
            &format!("rho_star{alpha}"),
            &c.bundle.rho_star[alpha - 1],
            TensorSymmetry::Transpose,
            &listed_for(&format!("rho_star{alpha}")),
        ));
    }
    out.push(support_check(
        c,
        "R",
        &c.bundle.r,
        TensorSymmetry::Riemann,
        &listed_for("R"),
    ));
    out.push(support_check(
        c,
        "rho",
        &c.bundle.rho,
        TensorSymmetry::Transpose,
        &listed_for("rho"),
    ));
    out
}

// ---------------------------------------------------------------------------
// Structural identity checks.
// ---------------------------------------------------------------------------

fn structural_checks(c: &Computed) -> Vec<CheckResult> {
    let name = c.alg.name();
    let mut out = Vec::new();
    out.push(CheckResult::of_bool(
        format!("{name} connection torsion-free"),
        tid::torsion_free(&c.tensors.connection, &c.alg),
        "identically zero torsion",
        "nonzero torsion",
    ));
    out.push(CheckResult::of_bool(
        format!("{name} connection metric"),
        tid::metric_compatible(&c.tensors.connection, &c.frame),
        "nabla g = 0",
        "nabla g != 0",
    ));
    for alpha in 1..=3usize {
        out.push(CheckResult::of_bool(
            format!("{name} F{alpha} symmetries"),
            tid::f_symmetries(&c.tensors.f[alpha - 1], &c.frame, alpha),
            "F(x,y,z) = -eps F(x,z,y) = -eps F(x,Jy,Jz)",
            "symmetry violated",
        ));
        out.push(CheckResult::of_bool(
            format!("{name} N{alpha} symmetries"),
            tid::n_symmetries(&c.tensors.nijenhuis[alpha - 1], &c.frame, alpha),
            "N(x,y) = -N(y,x) = -N(Jx,Jy)",
            "symmetry violated",
        ));
    }
    for (alpha, beta, gamma) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        out.push(CheckResult::of_bool(
            format!("{name} F-relation ({alpha},{beta},{gamma})"),
            tid::f_cyclic_relation(&c.tensors.f, &c.frame, alpha, beta, gamma),
            "F_a(x,y,z) = F_b(x,J_c y,z) - eps_b F_c(x,y,J_b z)",
            "relation violated",
        ));
    }
    out.push(CheckResult::of_bool(
        format!("{name} R antisymmetries and first Bianchi"),
        rid::r_properties(&c.bundle.r),
        "R properties hold",
        "violated",
    ));
    out.push(CheckResult::of_bool(
        format!("{name} R pair-interchange symmetry"),
        rid::block_symmetry(&c.bundle.r),
        "R_{ijkl} = R_{klij}",
        "violated",
    ));
    out
}

// ---------------------------------------------------------------------------
// Theorem claim checks.
// ---------------------------------------------------------------------------

fn assignment(vars: &VarSet, a: &Rational, b: &Rational) -> BTreeMap<String, Rational> {
    [
        (vars.names()[0].clone(), a.clone()),
        (vars.names()[1].clone(), b.clone()),
    ]
    .into()
}

fn planes_of_type(c: &Computed, alpha: usize, ty: PlaneType) -> Vec<Poly> {
    c.table
        .entries
        .iter()
        .filter(|e| e.types[alpha - 1] == ty)
        .map(|e| e.value.clone())
        .collect()
}

/// All listed curvature values carry the wanted sign at every `inside`
/// point, and fail to all carry it at every `outside` point.
fn region_check(
    c: &Computed,
    id: &str,
    values: &[Poly],
    want: Sign,
    inside: &[(Rational, Rational)],
    outside: &[(Rational, Rational)],
) -> CheckResult {
    let vars = c.alg.vars();
    for (a, b) in inside {
        let asgn = assignment(vars, a, b);
        for v in values {
            let val = match v.eval(&asgn) {
                Ok(val) => val,
                Err(e) => {
                    return CheckResult::of_bool(id, false, "evaluable", &e.to_string());
                }
            };
            if Sign::of(&val) != want {
                return CheckResult::of_bool(
                    id,
                    false,
                    &format!("sign {want} at ({a}, {b})"),
                    &format!("sign {} for value {v}", Sign::of(&val)),
                );
            }
        }
    }
    for (a, b) in outside {
        let asgn = assignment(vars, a, b);
        let all_want = values.iter().all(|v| {
            v.eval(&asgn)
                .map(|val| Sign::of(&val) == want)
                .unwrap_or(false)
        });
        if all_want {
            return CheckResult::of_bool(
                id,
                false,
                &format!("some value departs from sign {want} at ({a}, {b})"),
                "all values carry the claimed sign outside the region",
            );
        }
    }
    CheckResult::pass(id)
}

fn pts(data: &[(i64, i64, i64, i64)]) -> Vec<(Rational, Rational)> {
    data.iter()
        .map(|&(an, ad, bn, bd)| (rat(an, ad), rat(bn, bd)))
        .collect()
}

fn conditions_equal(computed: &Vanishing, expected: &str, vars: &VarSet) -> bool {
    match computed {
        Vanishing::Conditions(cs) => {
            cs.len() == 1 && cs[0] == Poly::parse(vars, expected).unwrap().normalized()
        }
        _ => false,
    }
}

fn g45_theorem_checks(c: &Computed) -> Vec<CheckResult> {
    let vars = c.alg.vars().clone();
    let mut out = Vec::new();

    // (1) Vanishing Nijenhuis tensor iff a = b = 1.
    {
        let mut conds: Vec<Poly> = Vec::new();
        for n in &c.tensors.nijenhuis {
            for (_, v) in n.nonzero() {
                let nv = v.normalized();
                if !conds.contains(&nv) {
                    conds.push(nv);
                }
            }
        }
        conds.sort_by_key(|p| p.to_string());
        let expected: Vec<Poly> = ["a - 1", "a - b", "b - 1"]
            .iter()
            .map(|s| Poly::parse(&vars, s).unwrap())
            .collect();
        let at_11 = assignment(&vars, &rat_int(1), &rat_int(1));
        let all_zero_at_11 = c
            .tensors
            .nijenhuis
            .iter()
            .all(|n| n.eval(&at_11).map(|t| t.is_zero()).unwrap_or(false));
        out.push(CheckResult::of_bool(
            "thm-45-2.1 N = 0 iff (a, b) = (1, 1)",
            conds == expected && all_zero_at_11,
            "conditions {a - 1, b - 1, a - b} with unique common zero (1, 1)",
            &format!("conditions {conds:?}"),
        ));
    }

    // (2) Non-flat everywhere: a constant curvature component witnesses it.
    out.push(CheckResult::of_bool(
        "thm-45-2.2 non-flat",
        c.bundle.r.get(&[0, 3, 0, 3]).is_one(),
        "R_1414 = 1",
        &c.bundle.r.get(&[0, 3, 0, 3]).to_string(),
    ));

    // (3) Positive scalar curvature: exact minimum of tau/2 at (-1/3, -1/3)
    // by completing the square, plus a 100-point grid.
    {
        let half_tau = c.bundle.tau.scale(&rat(1, 2));
        let s1 = Poly::parse(&vars, "a + 1/2*b + 1/2").unwrap();
        let s2 = Poly::parse(&vars, "b + 1/3").unwrap();
        let squares = &(&s1 * &s1) + &(&s2 * &s2).scale(&rat(3, 4));
        let identity_ok =
            &half_tau - &Poly::parse(&vars, "2/3").unwrap() == squares;
        let min_ok = half_tau
            .eval(&assignment(&vars, &rat(-1, 3), &rat(-1, 3)))
            .map(|v| v == rat(2, 3))
            .unwrap_or(false);
        let mut grid_ok = true;
        for an in -5i64..=5 {
            for bn in -5i64..=5 {
                if an == 0 || bn == 0 {
                    continue;
                }
                let asgn = assignment(&vars, &rat_int(an), &rat_int(bn));
                if Sign::of(&c.bundle.tau.eval(&asgn).unwrap()) != Sign::Positive {
                    grid_ok = false;
                }
            }
        }
        out.push(CheckResult::of_bool(
            "thm-45-2.3 positive scalar curvature",
            identity_ok && min_ok && grid_ok,
            "tau/2 = 2/3 + (a + (b+1)/2)^2 + 3/4 (b + 1/3)^2, minimum 2/3",
            "identity or grid failed",
        ));
    }

    // (4) *-scalar flat for every alpha.
    out.push(CheckResult::of_bool(
        "thm-45-2.4 *-scalar flat",
        c.bundle.tau_star.iter().all(Poly::is_zero),
        "tau*_alpha = 0",
        "nonzero tau*",
    ));

    // (5)-(7) **-scalar flat conditions.
    for (i, cond) in ["a + b^2", "a^2 + b", "a*b + 1"].iter().enumerate() {
        let vn = vanishing_analysis(&c.bundle.tau_star_star[i], c.alg.constraints());
        out.push(CheckResult::of_bool(
            format!("thm-45-2.{} tau**_{} = 0 iff {cond} = 0", 5 + i, i + 1),
            conditions_equal(&vn, cond, &vars),
            cond,
            &format!("{vn:?}"),
        ));
    }

    // (8)-(10) positive basic holomorphic sectional curvatures.
    let inside_a = pts(&[(1, 1, 1, 1), (2, 1, -3, 1), (1, 2, 5, 1)]);
    let outside_a = pts(&[(-1, 1, 1, 1), (-2, 1, -3, 1)]);
    out.push(region_check(
        c,
        "thm-45-2.8 J1-holomorphic positive iff a > 0",
        &planes_of_type(c, 1, PlaneType::Holomorphic),
        Sign::Positive,
        &inside_a,
        &outside_a,
    ));
    let inside_b = pts(&[(1, 1, 1, 1), (-2, 1, 3, 1), (5, 1, 1, 2)]);
    let outside_b = pts(&[(1, 1, -1, 1), (-2, 1, -3, 1)]);
    out.push(region_check(
        c,
        "thm-45-2.9 J2-holomorphic positive iff b > 0",
        &planes_of_type(c, 2, PlaneType::Holomorphic),
        Sign::Positive,
        &inside_b,
        &outside_b,
    ));
    let inside_ab = pts(&[(1, 1, 1, 1), (-2, 1, -3, 1), (1, 2, 1, 3)]);
    let outside_ab = pts(&[(-1, 1, 1, 1), (1, 1, -1, 1)]);
    out.push(region_check(
        c,
        "thm-45-2.10 J3-holomorphic positive iff ab > 0",
        &planes_of_type(c, 3, PlaneType::Holomorphic),
        Sign::Positive,
        &inside_ab,
        &outside_ab,
    ));

    // (11) positive basic totally real sectional curvatures iff a, b > 0.
    {
        let mut values = Vec::new();
        for alpha in 1..=3 {
            values.extend(planes_of_type(c, alpha, PlaneType::TotallyReal));
        }
        out.push(region_check(
            c,
            "thm-45-2.11 totally-real positive iff a > 0 and b > 0",
            &values,
            Sign::Positive,
            &pts(&[(1, 1, 1, 1), (2, 1, 3, 1), (1, 2, 7, 2)]),
            &pts(&[(-1, 1, 1, 1), (1, 1, -1, 1), (-2, 1, -3, 1)]),
        ));
    }
    out
}

fn g46_theorem_checks(c: &Computed) -> Vec<CheckResult> {
    let vars = c.alg.vars().clone();
    let mut out = Vec::new();

    // (1) N_3 vanishes identically.
    out.push(CheckResult::of_bool(
        "thm-46-2.1 N3 = 0",
        c.tensors.nijenhuis[2].is_zero(),
        "N3 = 0",
        "N3 != 0",
    ));

    // (2) Non-flat: R_2323 = b^2 + 1 has no real zero.
    {
        let v = vanishing_analysis(c.bundle.r.get(&[1, 2, 1, 2]), c.alg.constraints());
        out.push(CheckResult::of_bool(
            "thm-46-2.2 non-flat",
            matches!(v, Vanishing::NeverZero { .. }),
            "R_2323 = b^2 + 1 never vanishes",
            &format!("{v:?}"),
        ));
    }

    // (3) Scalar flat iff a^2 + 2ab + 3b^2 - 1 = 0; rational in-domain
    // witnesses (1, 0) and (-1, 0).
    {
        let vn = vanishing_analysis(&c.bundle.tau, c.alg.constraints());
        let cond_ok = conditions_equal(&vn, "a^2 + 2*a*b + 3*b^2 - 1", &vars);
        let z1 = c
            .bundle
            .tau
            .eval(&assignment(&vars, &rat_int(1), &rat_int(0)))
            .unwrap()
            .is_zero();
        let z2 = c
            .bundle
            .tau
            .eval(&assignment(&vars, &rat_int(-1), &rat_int(0)))
            .unwrap()
            .is_zero();
        let nz = !c
            .bundle
            .tau
            .eval(&assignment(&vars, &rat_int(1), &rat_int(1)))
            .unwrap()
            .is_zero();
        out.push(CheckResult::of_bool(
            "thm-46-2.3 scalar flat iff a^2 + 2ab + 3b^2 = 1",
            cond_ok && z1 && z2 && nz,
            "condition {a^2 + 2*a*b + 3*b^2 - 1}",
            &format!("{vn:?}"),
        ));
    }

    // (4) *-scalar flat w.r.t. J1 and J2.
    out.push(CheckResult::of_bool(
        "thm-46-2.4 tau*_1 = tau*_2 = 0",
        c.bundle.tau_star[0].is_zero() && c.bundle.tau_star[1].is_zero(),
        "tau*_1 = tau*_2 = 0",
        "nonzero",
    ));

    // (5) tau*_3 = 0 iff a = -2b.
    {
        let vn = vanishing_analysis(&c.bundle.tau_star[2], c.alg.constraints());
        let witness_ok = c.bundle.tau_star[2]
            .eval(&assignment(&vars, &rat_int(-2), &rat_int(1)))
            .unwrap()
            .is_zero();
        out.push(CheckResult::of_bool(
            "thm-46-2.5 tau*_3 = 0 iff a = -2b",
            conditions_equal(&vn, "a + 2*b", &vars) && witness_ok,
            "condition {a + 2*b}",
            &format!("{vn:?}"),
        ));
    }

    // (6) tau**_1 = tau**_2 = 0 iff b^2 + ab - 1 = 0.
    {
        let equal = c.bundle.tau_star_star[0] == c.bundle.tau_star_star[1];
        let vn = vanishing_analysis(&c.bundle.tau_star_star[0], c.alg.constraints());
        let witness_ok = c.bundle.tau_star_star[0]
            .eval(&assignment(&vars, &rat(3, 2), &rat(1, 2)))
            .unwrap()
            .is_zero();
        out.push(CheckResult::of_bool(
            "thm-46-2.6 tau**_{1,2} = 0 iff b^2 + ab = 1",
            equal && conditions_equal(&vn, "a*b + b^2 - 1", &vars) && witness_ok,
            "condition {a*b + b^2 - 1}",
            &format!("{vn:?}"),
        ));
    }

    // (7) tau**_3 always positive.
    {
        let vn = vanishing_analysis(&c.bundle.tau_star_star[2], c.alg.constraints());
        let positive_samples = pts(&[(1, 1, 0, 1), (-2, 1, 3, 1), (1, 2, 1, 2)])
            .iter()
            .all(|(a, b)| {
                Sign::of(
                    &c.bundle.tau_star_star[2]
                        .eval(&assignment(&vars, a, b))
                        .unwrap(),
                ) == Sign::Positive
            });
        out.push(CheckResult::of_bool(
            "thm-46-2.7 tau**_3 > 0",
            matches!(vn, Vanishing::NeverZero { .. }) && positive_samples,
            "2(a^2 + b^2 + 1) >= 2",
            &format!("{vn:?}"),
        ));
    }

    // (8) J1/J2-holomorphic positive iff a > 0, b > 1; negative iff
    // a < 0, 0 < b < 1.
    let mut holo12 = planes_of_type(c, 1, PlaneType::Holomorphic);
    holo12.extend(planes_of_type(c, 2, PlaneType::Holomorphic));
    out.push(region_check(
        c,
        "thm-46-2.8a J1/J2-holomorphic positive iff a > 0 and b > 1",
        &holo12,
        Sign::Positive,
        &pts(&[(1, 1, 2, 1), (3, 1, 3, 2), (1, 2, 5, 1)]),
        &pts(&[(-1, 1, 2, 1), (1, 1, 1, 2), (1, 1, 1, 1), (-1, 1, 1, 2), (1, 1, 0, 1)]),
    ));
    out.push(region_check(
        c,
        "thm-46-2.8b J1/J2-holomorphic negative iff a < 0 and 0 < b < 1",
        &holo12,
        Sign::Negative,
        &pts(&[(-1, 1, 1, 2), (-3, 1, 1, 4), (-1, 2, 3, 4)]),
        &pts(&[(1, 1, 1, 2), (-1, 1, 2, 1), (-1, 1, 1, 1), (-1, 1, 0, 1), (1, 1, 2, 1)]),
    ));

    // (9) J3-holomorphic always positive.
    out.push(region_check(
        c,
        "thm-46-2.9 J3-holomorphic positive",
        &planes_of_type(c, 3, PlaneType::Holomorphic),
        Sign::Positive,
        &pts(&[(1, 1, 0, 1), (-2, 1, 3, 1), (1, 2, 1, 2), (-1, 1, 5, 1)]),
        &[],
    ));

    // (10) J1/J2 totally real positive iff a > 0 and b > 1.
    let mut tr12 = planes_of_type(c, 1, PlaneType::TotallyReal);
    tr12.extend(planes_of_type(c, 2, PlaneType::TotallyReal));
    out.push(region_check(
        c,
        "thm-46-2.10 J1/J2 totally-real positive iff a > 0 and b > 1",
        &tr12,
        Sign::Positive,
        &pts(&[(1, 1, 2, 1), (3, 1, 3, 2), (1, 2, 5, 1)]),
        &pts(&[(-1, 1, 2, 1), (1, 1, 1, 2), (1, 1, 1, 1), (1, 1, 0, 1)]),
    ));

    // (11) J3 totally real: positive iff a > 0, b > 1; negative iff
    // a < 0, 0 < b < 1.
    let tr3 = planes_of_type(c, 3, PlaneType::TotallyReal);
    out.push(region_check(
        c,
        "thm-46-2.11a J3 totally-real positive iff a > 0 and b > 1",
        &tr3,
        Sign::Positive,
        &pts(&[(1, 1, 2, 1), (3, 1, 3, 2)]),
        &pts(&[(-1, 1, 2, 1), (1, 1, 1, 2), (1, 1, 1, 1), (1, 1, 0, 1)]),
    ));
    out.push(region_check(
        c,
        "thm-46-2.11b J3 totally-real negative iff a < 0 and 0 < b < 1",
        &tr3,
        Sign::Negative,
        &pts(&[(-1, 1, 1, 2), (-3, 1, 1, 4)]),
        &pts(&[(1, 1, 1, 2), (-1, 1, 2, 1), (-1, 1, 1, 1), (-1, 1, 0, 1)]),
    ));
    out
}

// ---------------------------------------------------------------------------
// Classification table checks.
// ---------------------------------------------------------------------------

enum RowPred {
    Pt(Rational, Rational),
    Curve(&'static str),
    Generic,
}

fn g45_rows() -> Vec<(RowPred, [&'static str; 3])> {
    vec![
        (RowPred::Pt(rat_int(-1), rat_int(1)), ["W2", "W2", "W1+W2+W3"]),
        (RowPred::Pt(rat_int(-1), rat_int(-1)), ["W2", "W1+W2+W3", "W2"]),
        (RowPred::Curve("a + 1"), ["W2", "W1+W2+W3", "W1+W2+W3"]),
        (RowPred::Pt(rat_int(1), rat_int(1)), ["W4", "W1", "W1+W2"]),
        (RowPred::Pt(rat_int(1), rat_int(-3)), ["W4", "W2+W3", "W2+W3"]),
        (RowPred::Curve("a - 1"), ["W4", "W1+W2+W3", "W1+W2+W3"]),
        (RowPred::Curve("b - 1"), ["W2+W4", "W1+W2", "W1+W2+W3"]),
        (
            RowPred::Pt(rat(-1, 3), rat(-1, 3)),
            ["W2+W4", "W2+W3", "W1+W2"],
        ),
        (RowPred::Curve("2*a + b + 1"), ["W2+W4", "W2+W3", "W1+W2+W3"]),
        (RowPred::Curve("a - b"), ["W2+W4", "W1+W2+W3", "W1+W2"]),
        (RowPred::Curve("a + b + 2"), ["W2+W4", "W1+W2+W3", "W2+W3"]),
        (RowPred::Generic, ["W2+W4", "W1+W2+W3", "W1+W2+W3"]),
    ]
}

/// Is `sub` contained in `sup` as class sums (K is contained in anything)?
fn contained(sub: &MinimalClass, sup: &MinimalClass) -> bool {
    match (sub, sup) {
        (MinimalClass::KahlerType, _) => true,
        (MinimalClass::Sum(_), MinimalClass::KahlerType) => false,
        (MinimalClass::Sum(a), MinimalClass::Sum(b)) => a.iter().all(|c| b.contains(c)),
    }
}

/// Decomposition-independent corroboration used for the single g4_5 table
/// cell the source over-states: at the given point, the tensor must equal
/// the Lee-form expression of the claimed smaller class exactly.
fn theta_identity_holds_at(
    c: &Computed,
    alpha: usize,
    point: &(Rational, Rational),
) -> bool {
    let vars = c.alg.vars().clone();
    let asgn = assignment(&vars, &point.0, &point.1);
    let (Ok(f_at), Ok(theta_at)) = (
        c.tensors.f[alpha - 1].eval(&asgn),
        c.tensors.theta[alpha - 1].eval(&asgn),
    ) else {
        return false;
    };
    let g = c.frame.metric();
    let gj = c.frame.metric().mul(c.frame.j(alpha));
    let jm = c.frame.j(alpha);
    let theta = |m: usize| theta_at.get(&[m]).as_constant().unwrap();
    let theta_j = |m: usize| {
        // theta(J e_m)
        let mut acc = Rational::zero();
        for p in 0..DIM {
            if !jm.at(p, m).is_zero() {
                acc += jm.at(p, m) * theta(p);
            }
        }
        acc
    };
    let quarter = rat(1, 4);
    for idx in crate::tensorcalc::indices(3) {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let expected = (g.at(i, j) * theta(k)
            + gj.at(i, j) * theta_j(k)
            + g.at(i, k) * theta(j)
            + gj.at(i, k) * theta_j(j))
            * &quarter;
        if f_at.get(&[i, j, k]).as_constant().unwrap() != expected {
            return false;
        }
    }
    true
}

fn g45_classification_checks(c: &Computed) -> Result<Vec<CheckResult>> {
    let vars = c.alg.vars().clone();
    let table = classification_table(&c.alg, &c.frame)?;
    let mut out = Vec::new();
    for (row_no, (pred, labels)) in g45_rows().into_iter().enumerate() {
        let id = format!("g4_5 table row {}", row_no + 1);
        let expected: Vec<MinimalClass> = labels
            .iter()
            .map(|l| MinimalClass::parse(l).unwrap())
            .collect();
        // Locate the matching stratum.
        let stratum = table.strata.iter().find(|s| match (&pred, &s.predicate) {
            (RowPred::Pt(a, b), StratumPredicate::Point(sa, sb)) => a == sa && b == sb,
            (RowPred::Curve(cond), StratumPredicate::Curve { condition, .. }) => {
                Poly::parse(&vars, cond).unwrap().proportional_to(condition)
            }
            (RowPred::Generic, StratumPredicate::Generic) => true,
            _ => false,
        });
        let Some(stratum) = stratum else {
            out.push(CheckResult::of_bool(
                &id,
                false,
                "a stratum with the printed predicate",
                "no matching stratum generated",
            ));
            continue;
        };
        // Witness agreement: the decomposition at the stratum witness must
        // match the stratum classes.
        let asgn = assignment(&vars, &stratum.witness.0, &stratum.witness.1);
        let mut witness_ok = true;
        for alpha in 1..=3usize {
            if c.reports[alpha - 1].minimal_at(&asgn)? != stratum.classes[alpha - 1] {
                witness_ok = false;
            }
        }
        if !witness_ok {
            out.push(CheckResult::of_bool(
                &id,
                false,
                "witness point classes match the stratum classes",
                "mismatch at the stratum witness",
            ));
            continue;
        }
        if stratum.classes.to_vec() == expected {
            out.push(CheckResult::pass(id));
            continue;
        }
        // Cell-level mismatch: accept a strictly smaller computed class when
        // the defining identity of the smaller class holds exactly at the
        // point (source over-statement), otherwise fail.
        let mut resolved = true;
        let mut notes = Vec::new();
        for alpha in 1..=3usize {
            let computed = &stratum.classes[alpha - 1];
            let printed = &expected[alpha - 1];
            if computed == printed {
                continue;
            }
            let corroborated = match (&pred, computed) {
                (RowPred::Pt(a, b), MinimalClass::Sum(cs))
                    if contained(computed, printed)
                        && cs == &vec![BasicClass::W1]
                        && alpha >= 2 =>
                {
                    theta_identity_holds_at(c, alpha, &(a.clone(), b.clone()))
                }
                _ => false,
            };
            if corroborated {
                notes.push(Discrepancy {
                    quantity: format!("{id} J{alpha} class"),
                    published: printed.to_string(),
                    computed: computed.to_string(),
                    corroborated_by: format!(
                        "the W1 defining Lee-form identity holds identically at the point; \
                         membership in the printed class {printed} still holds"
                    ),
                });
            } else {
                resolved = false;
            }
        }
        if resolved && !notes.is_empty() {
            // One or more over-stated cells, each corroborated: merge into a
            // single reported discrepancy for the row.
            let merged = if notes.len() == 1 {
                notes.into_iter().next().unwrap()
            } else {
                Discrepancy {
                    quantity: format!("{id} classes"),
                    published: notes
                        .iter()
                        .map(|n| n.published.clone())
                        .collect::<Vec<_>>()
                        .join("; "),
                    computed: notes
                        .iter()
                        .map(|n| n.computed.clone())
                        .collect::<Vec<_>>()
                        .join("; "),
                    corroborated_by: notes
                        .iter()
                        .map(|n| n.corroborated_by.clone())
                        .collect::<Vec<_>>()
                        .join("; "),
                }
            };
            out.push(CheckResult {
                id,
                status: CheckStatus::Discrepancy(merged),
            });
        } else if resolved {
            out.push(CheckResult::pass(id));
        } else {
            out.push(CheckResult::of_bool(
                &id,
                false,
                &format!("classes {expected:?}"),
                &format!("classes {:?}", stratum.classes),
            ));
        }
    }
    Ok(out)
}

fn g46_classification_checks(c: &Computed) -> Result<Vec<CheckResult>> {
    let vars = c.alg.vars().clone();
    let table = classification_table(&c.alg, &c.frame)?;
    let mut out = Vec::new();
    let expected = [
        MinimalClass::parse("W2+W4").unwrap(),
        MinimalClass::parse("W1+W2+W3").unwrap(),
        MinimalClass::parse("W1+W2").unwrap(),
    ];
    let single_generic = table.strata.len() == 1
        && table.strata[0].predicate == StratumPredicate::Generic
        && table.strata[0].classes.to_vec() == expected.to_vec();
    out.push(CheckResult::of_bool(
        "g4_6 single generic stratum (W2+W4, W1+W2+W3, W1+W2)",
        single_generic,
        "one generic stratum with the printed classes",
        &format!("{} strata", table.strata.len()),
    ));

    // Sampled points with a != 0, b >= 0, including the boundary b = 0:
    // the minimal classes carry every stated "does not belong to"
    // exclusion (each printed basic class is genuinely present).
    let samples = pts(&[
        (1, 1, 0, 1), // boundary b = 0
        (2, 1, 1, 1),
        (1, 1, 2, 1),
        (-1, 1, 3, 1),
        (3, 1, 1, 2),
        (-2, 1, 5, 1),
        (1, 2, 1, 2),
        (-1, 2, 2, 1),
        (5, 1, 4, 1),
        (-3, 1, 1, 1),
        (7, 1, 1, 3),
    ]);
    for (a, b) in &samples {
        let asgn = assignment(&vars, a, b);
        let got = [
            c.reports[0].minimal_at(&asgn)?,
            c.reports[1].minimal_at(&asgn)?,
            c.reports[2].minimal_at(&asgn)?,
        ];
        out.push(CheckResult::of_bool(
            format!("g4_6 classes at ({a}, {b})"),
            got.to_vec() == expected.to_vec(),
            "(W2+W4, W1+W2+W3, W1+W2)",
            &format!("({}, {}, {})", got[0], got[1], got[2]),
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Entry points.
// ---------------------------------------------------------------------------

fn goldens_for(name: &str) -> Option<(&'static [GoldenEntry], &'static [(&'static str, &'static str)])> {
    match name {
        "g4_5" => Some((G45_COMPONENTS, G45_SCALARS)),
        "g4_6" => Some((G46_COMPONENTS, G46_SCALARS)),
        _ => None,
    }
}

/// Component-level mismatches against the pinned tables, for the analysis
/// report's discrepancy section. Empty for non-catalog algebras.
pub fn component_discrepancies(alg: &LieAlgebraSpec, frame: &HNFrame) -> Result<Vec<Discrepancy>> {
    let Some((components, scalars)) = goldens_for(alg.name()) else {
        return Ok(Vec::new());
    };
    let _ = frame;
    let c = compute(alg)?;
    let mut out = Vec::new();
    for check in component_checks(&c, components, scalars) {
        match check.status {
            CheckStatus::Discrepancy(d) => out.push(d),
            CheckStatus::Fail { expected, computed } => out.push(Discrepancy {
                quantity: check.id,
                published: expected,
                computed,
                corroborated_by: String::new(),
            }),
            CheckStatus::Pass => {}
        }
    }
    Ok(out)
}

/// The displayed form of the F-tensor relation carries eps_alpha where the
/// derivable, component-consistent form carries eps_beta; reported once as
/// a corroborated source discrepancy.
fn f_relation_sign_check(c5: &Computed, c6: &Computed) -> CheckResult {
    let displayed_fails = |c: &Computed| {
        // The displayed sign agrees with the derived one exactly when
        // eps_alpha = eps_beta, i.e. on the permutation (2,3,1); on the
        // other two permutations it contradicts the component tables.
        let mut fails = false;
        for (alpha, beta, gamma) in [(1usize, 2usize, 3usize), (3, 1, 2)] {
            let eps_a = rat_int(c.frame.eps(alpha));
            let jb = c.frame.j(beta);
            let jg = c.frame.j(gamma);
            let fa = &c.tensors.f[alpha - 1];
            let fb = &c.tensors.f[beta - 1];
            let fg = &c.tensors.f[gamma - 1];
            'outer: for idx in crate::tensorcalc::indices(3) {
                let (i, j, k) = (idx[0], idx[1], idx[2]);
                let mut rhs = Poly::zero(fa.vars());
                for p in 0..DIM {
                    if !jg.at(p, j).is_zero() {
                        rhs = &rhs + &fb.get(&[i, p, k]).scale(jg.at(p, j));
                    }
                    if !jb.at(p, k).is_zero() {
                        rhs = &rhs - &fg.get(&[i, j, p]).scale(&(jb.at(p, k) * &eps_a));
                    }
                }
                if fa.get(&[i, j, k]) != &rhs {
                    fails = true;
                    break 'outer;
                }
            }
        }
        fails
    };
    let derived_holds = [(1, 2, 3), (2, 3, 1), (3, 1, 2)].iter().all(|&(a, b, g)| {
        tid::f_cyclic_relation(&c5.tensors.f, &c5.frame, a, b, g)
            && tid::f_cyclic_relation(&c6.tensors.f, &c6.frame, a, b, g)
    });
    if derived_holds && displayed_fails(c5) && displayed_fails(c6) {
        CheckResult {
            id: "F-relation sign".to_string(),
            status: CheckStatus::Discrepancy(Discrepancy {
                quantity: "F_a = F_b(x, J_c y, z) - eps F_c(x, y, J_b z): the sign eps".to_string(),
                published: "eps_alpha".to_string(),
                computed: "eps_beta".to_string(),
                corroborated_by: "the displayed component tables of both algebras satisfy the \
                                  eps_beta form identically and contradict the eps_alpha form"
                    .to_string(),
            }),
        }
    } else if derived_holds {
        // Displayed form also holds; nothing to report.
        CheckResult::pass("F-relation sign")
    } else {
        CheckResult::of_bool(
            "F-relation sign",
            false,
            "derived relation holds identically",
            "derived relation fails",
        )
    }
}

/// Runs the complete verification suite over both catalog algebras.
pub fn run_all() -> Result<VerifyReport> {
    let mut checks = Vec::new();

    // The frame invariants are asserted at construction; surface them as a
    // single named check.
    let _ = standard_frame();
    checks.push(CheckResult::pass(
        "standard frame: quaternionic relations, compatibility, associated metrics",
    ));

    let c5 = compute(&catalog::g4_5())?;
    let c6 = compute(&catalog::g4_6())?;

    checks.extend(component_checks(&c5, G45_COMPONENTS, G45_SCALARS));
    checks.extend(support_checks(&c5, G45_COMPONENTS));
    checks.extend(structural_checks(&c5));
    checks.extend(g45_theorem_checks(&c5));
    checks.extend(g45_classification_checks(&c5)?);

    checks.extend(component_checks(&c6, G46_COMPONENTS, G46_SCALARS));
    checks.extend(support_checks(&c6, G46_COMPONENTS));
    checks.extend(structural_checks(&c6));
    checks.extend(g46_theorem_checks(&c6));
    checks.extend(g46_classification_checks(&c6)?);

    checks.push(f_relation_sign_check(&c5, &c6));

    Ok(VerifyReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_is_green_with_expected_discrepancies() {
        let report = run_all().unwrap();
        assert!(report.total() >= 120, "only {} checks", report.total());
        assert_eq!(report.failed(), 0, "failures: {:?}", report
            .checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Fail { .. }))
            .map(|c| &c.id)
            .collect::<Vec<_>>());
        let ds = report.discrepancies();
        assert_eq!(ds.len(), 4, "discrepancies: {ds:?}");
        assert!(ds.iter().any(|(id, _)| id.contains("R_3443")));
        assert!(ds.iter().any(|(id, _)| id.contains("N3_132")));
        assert!(ds.iter().any(|(id, _)| id.contains("table row 4")));
        assert!(ds.iter().any(|(id, _)| id.contains("F-relation sign")));
    }

    #[test]
    fn r3443_discrepancy_carries_both_values() {
        let report = run_all().unwrap();
        let (_, d) = report
            .discrepancies()
            .into_iter()
            .find(|(id, _)| id.contains("R_3443"))
            .expect("R_3443 discrepancy present");
        assert_eq!(d.published, "-b^2 + 2");
        assert_eq!(d.computed, "b^2 - 1");
        assert!(d.corroborated_by.contains("k_34"));
    }

    #[test]
    fn folding_picks_one_representative_per_orbit() {
        let c = compute(&catalog::g4_5()).unwrap();
        let folded = fold_components(&c.bundle.r, &c.frame, TensorSymmetry::Riemann);
        // Six independent curvature orbits for g4_5.
        assert_eq!(folded.len(), 6);
        for (idx, _) in &folded {
            assert!(idx.iter().all(|&i| i < DIM));
        }
    }

    #[test]
    fn non_catalog_algebra_has_no_discrepancies() {
        let frame = standard_frame();
        let abelian = catalog::abelian();
        assert!(component_discrepancies(&abelian, &frame)
            .unwrap()
            .is_empty());
    }
}
