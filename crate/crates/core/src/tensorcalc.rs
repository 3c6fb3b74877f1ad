//! Levi-Civita connection on the left-invariant frame and the structural
//! tensors derived from it: fundamental tensors F_alpha, Lee forms
//! theta_alpha, and Nijenhuis tensors N_alpha.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactalg::{Poly, RatMatrix, Rational, VarSet};
use crate::hnstruct::HNFrame;
use crate::liealg::LieAlgebraSpec;
use crate::{Error, Result, DIM};

/// Dense rank-k array of polynomial components in the fixed frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentTensor {
    rank: usize,
    vars: VarSet,
    data: Vec<Poly>,
}

impl ComponentTensor {
    pub fn zeros(vars: &VarSet, rank: usize) -> Self {
        assert!((1..=4).contains(&rank));
        ComponentTensor {
            rank,
            vars: vars.clone(),
            data: vec![Poly::zero(vars); DIM.pow(rank as u32)],
        }
    }

    pub fn from_fn(vars: &VarSet, rank: usize, mut f: impl FnMut(&[usize]) -> Poly) -> Self {
        let mut t = ComponentTensor::zeros(vars, rank);
        for idx in indices(rank) {
            t.set(&idx, f(&idx));
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank);
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < DIM);
            acc * DIM + i
        })
    }

    /// Component at a 0-based multi-index.
    pub fn get(&self, idx: &[usize]) -> &Poly {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Poly) {
        let o = self.offset(idx);
        self.data[o] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &ComponentTensor) -> ComponentTensor {
        assert_eq!(self.rank, other.rank);
        ComponentTensor {
            rank: self.rank,
            vars: self.vars.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ComponentTensor) -> ComponentTensor {
        assert_eq!(self.rank, other.rank);
        ComponentTensor {
            rank: self.rank,
            vars: self.vars.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    /// Nonzero components as (0-based multi-index, value) pairs.
    pub fn nonzero(&self) -> Vec<(Vec<usize>, &Poly)> {
        indices(self.rank)
            .filter_map(|idx| {
                let p = self.get(&idx);
                if p.is_zero() {
                    None
                } else {
                    Some((idx, p))
                }
            })
            .collect()
    }

    /// Exact evaluation of every component.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<ComponentTensor> {
        let mut out = ComponentTensor::zeros(&self.vars, self.rank);
        for idx in indices(self.rank) {
            let v = self.get(&idx).eval(assignment)?;
            out.set(&idx, Poly::constant(&self.vars, v));
        }
        Ok(out)
    }

    /// Flat component list in row-major index order.
    pub fn flat(&self) -> &[Poly] {
        &self.data
    }

    pub fn from_flat(vars: &VarSet, rank: usize, data: Vec<Poly>) -> Self {
        assert_eq!(data.len(), DIM.pow(rank as u32));
        ComponentTensor {
            rank,
            vars: vars.clone(),
            data,
        }
    }
}

/// All 0-based multi-indices of the given rank, row-major.
pub fn indices(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..DIM.pow(rank as u32)).map(move |mut n| {
        let mut idx = vec![0usize; rank];
        for d in (0..rank).rev() {
            idx[d] = n % DIM;
            n /= DIM;
        }
        idx
    })
}

/// Levi-Civita connection in the frame: nabla_{e_i} e_j = gamma[i][j][k] e_k.
#[derive(Clone, Debug)]
pub struct Connection {
    vars: VarSet,
    gamma: Vec<Poly>,
}

impl Connection {
    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// gamma[i][j][k], 0-based.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Poly {
        &self.gamma[(i * DIM + j) * DIM + k]
    }

    /// nabla_{e_i} e_j as a frame vector.
    pub fn nabla_basis(&self, i: usize, j: usize) -> [Poly; 4] {
        std::array::from_fn(|k| self.gamma(i, j, k).clone())
    }

    /// nabla_{e_i} of a vector with frame-constant coefficients.
    pub fn nabla_vec(&self, i: usize, v: &[Poly; 4]) -> [Poly; 4] {
        std::array::from_fn(|k| {
            let mut acc = Poly::zero(&self.vars);
            for j in 0..DIM {
                if !v[j].is_zero() {
                    let g = self.gamma(i, j, k);
                    if !g.is_zero() {
                        acc = &acc + &(&v[j] * g);
                    }
                }
            }
            acc
        })
    }
}

/// g(v, e_l) for a polynomial frame vector.
pub(crate) fn pair_with_basis(g: &RatMatrix, v: &[Poly], l: usize, vars: &VarSet) -> Poly {
    let mut acc = Poly::zero(vars);
    for (m, vm) in v.iter().enumerate() {
        if !vm.is_zero() && !g.at(m, l).is_zero() {
            acc = &acc + &vm.scale(g.at(m, l));
        }
    }
    acc
}

/// The unique torsion-free metric connection on the invariant frame. Since
/// g has constant frame components, the Koszul formula reduces to
///
/// ```text
/// 2 g(nabla_{e_i} e_j, e_l) = g([e_i,e_j], e_l) + g([e_l,e_i], e_j) + g([e_l,e_j], e_i)
/// ```
///
/// and the index is raised with the inverse metric.
pub fn levi_civita(alg: &LieAlgebraSpec, frame: &HNFrame) -> Connection {
    let vars = alg.vars().clone();
    let g = frame.metric();
    let ginv = frame.metric_inv();
    let half = crate::exactalg::rat(1, 2);

    let mut koszul = vec![Poly::zero(&vars); DIM * DIM * DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            for l in 0..DIM {
                let term1 = pair_with_basis(g, &alg.bracket_of_basis(i, j).0, l, &vars);
                let term2 = pair_with_basis(g, &alg.bracket_of_basis(l, i).0, j, &vars);
                let term3 = pair_with_basis(g, &alg.bracket_of_basis(l, j).0, i, &vars);
                koszul[(i * DIM + j) * DIM + l] = &(&term1 + &term2) + &term3;
            }
        }
    }
    let mut gamma = vec![Poly::zero(&vars); DIM * DIM * DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let mut acc = Poly::zero(&vars);
                for l in 0..DIM {
                    let coeff = ginv.at(k, l);
                    if !coeff.is_zero() {
                        acc = &acc + &koszul[(i * DIM + j) * DIM + l].scale(coeff);
                    }
                }
                gamma[(i * DIM + j) * DIM + k] = acc.scale(&half);
            }
        }
    }
    Connection { vars, gamma }
}

/// (nabla_{e_i} J_alpha) e_j = nabla_{e_i}(J e_j) - J nabla_{e_i} e_j; J has
/// constant frame components, so no derivative-of-J term appears.
pub fn nabla_j(conn: &Connection, frame: &HNFrame, alpha: usize, i: usize, j: usize) -> [Poly; 4] {
    let vars = conn.vars().clone();
    let jm = frame.j(alpha);
    // nabla_i (J e_j): J e_j has rational coefficients J[m][j].
    let mut first = [
        Poly::zero(&vars),
        Poly::zero(&vars),
        Poly::zero(&vars),
        Poly::zero(&vars),
    ];
    for m in 0..DIM {
        if jm.at(m, j).is_zero() {
            continue;
        }
        for k in 0..DIM {
            let g = conn.gamma(i, m, k);
            if !g.is_zero() {
                first[k] = &first[k] + &g.scale(jm.at(m, j));
            }
        }
    }
    // J (nabla_i e_j).
    let nab = conn.nabla_basis(i, j);
    std::array::from_fn(|k| {
        let mut acc = first[k].clone();
        for m in 0..DIM {
            if !jm.at(k, m).is_zero() && !nab[m].is_zero() {
                acc = &acc - &nab[m].scale(jm.at(k, m));
            }
        }
        acc
    })
}

/// Fundamental tensor (F_alpha)_{ijk} = g((nabla_{e_i} J_alpha) e_j, e_k).
pub fn fundamental_tensor(conn: &Connection, frame: &HNFrame, alpha: usize) -> ComponentTensor {
    let vars = conn.vars().clone();
    let mut f = ComponentTensor::zeros(&vars, 3);
    for i in 0..DIM {
        for j in 0..DIM {
            let dj = nabla_j(conn, frame, alpha, i, j);
            for k in 0..DIM {
                f.set(&[i, j, k], pair_with_basis(frame.metric(), &dj, k, &vars));
            }
        }
    }
    f
}

/// Lee form (theta_alpha)_i = g^{kl} (F_alpha)_{kli}.
pub fn lee_form(f: &ComponentTensor, frame: &HNFrame) -> ComponentTensor {
    assert_eq!(f.rank(), 3);
    let vars = f.vars().clone();
    let ginv = frame.metric_inv();
    ComponentTensor::from_fn(&vars, 1, |idx| {
        let i = idx[0];
        let mut acc = Poly::zero(&vars);
        for k in 0..DIM {
            for l in 0..DIM {
                if !ginv.at(k, l).is_zero() {
                    let c = f.get(&[k, l, i]);
                    if !c.is_zero() {
                        acc = &acc + &c.scale(ginv.at(k, l));
                    }
                }
            }
        }
        acc
    })
}

/// Nijenhuis tensor of J_alpha, lowered with g:
/// N(x, y) = (nabla_x J) J y - (nabla_y J) J x + (nabla_{Jx} J) y - (nabla_{Jy} J) x.
pub fn nijenhuis(conn: &Connection, frame: &HNFrame, alpha: usize) -> ComponentTensor {
    let vars = conn.vars().clone();
    let jm = frame.j(alpha);
    // dj[i][p] = (nabla_{e_i} J) e_p.
    let dj: Vec<Vec<[Poly; 4]>> = (0..DIM)
        .map(|i| (0..DIM).map(|p| nabla_j(conn, frame, alpha, i, p)).collect())
        .collect();

    let mut n = ComponentTensor::zeros(&vars, 3);
    for i in 0..DIM {
        for j in 0..DIM {
            let mut v = [
                Poly::zero(&vars),
                Poly::zero(&vars),
                Poly::zero(&vars),
                Poly::zero(&vars),
            ];
            for p in 0..DIM {
                for k in 0..DIM {
                    // (nabla_{e_i} J)(J e_j) and -(nabla_{e_j} J)(J e_i).
                    if !jm.at(p, j).is_zero() && !dj[i][p][k].is_zero() {
                        v[k] = &v[k] + &dj[i][p][k].scale(jm.at(p, j));
                    }
                    if !jm.at(p, i).is_zero() && !dj[j][p][k].is_zero() {
                        v[k] = &v[k] - &dj[j][p][k].scale(jm.at(p, i));
                    }
                    // (nabla_{J e_i} J) e_j and -(nabla_{J e_j} J) e_i.
                    if !jm.at(p, i).is_zero() && !dj[p][j][k].is_zero() {
                        v[k] = &v[k] + &dj[p][j][k].scale(jm.at(p, i));
                    }
                    if !jm.at(p, j).is_zero() && !dj[p][i][k].is_zero() {
                        v[k] = &v[k] - &dj[p][i][k].scale(jm.at(p, j));
                    }
                }
            }
            for k in 0..DIM {
                n.set(&[i, j, k], pair_with_basis(frame.metric(), &v, k, &vars));
            }
        }
    }
    n
}

/// Structural identity checks, shared by the test suites and the verifier.
pub mod identities {
    use super::*;

    /// Torsion-freeness: gamma[i][j][.] - gamma[j][i][.] = [e_i, e_j].
    pub fn torsion_free(conn: &Connection, alg: &LieAlgebraSpec) -> bool {
        for i in 0..DIM {
            for j in 0..DIM {
                let bracket = alg.bracket_of_basis(i, j);
                for k in 0..DIM {
                    if (conn.gamma(i, j, k) - conn.gamma(j, i, k)) != bracket.0[k] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Metric compatibility on the constant frame:
    /// g(nabla_{e_i} e_j, e_k) + g(e_j, nabla_{e_i} e_k) = 0.
    pub fn metric_compatible(conn: &Connection, frame: &HNFrame) -> bool {
        let vars = conn.vars().clone();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let left = pair_with_basis(frame.metric(), &conn.nabla_basis(i, j), k, &vars);
                    let right = pair_with_basis(frame.metric(), &conn.nabla_basis(i, k), j, &vars);
                    if !(&left + &right).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// F_alpha(x,y,z) = -eps F(x,z,y) = -eps F(x, J y, J z).
    pub fn f_symmetries(f: &ComponentTensor, frame: &HNFrame, alpha: usize) -> bool {
        let eps = crate::exactalg::rat_int(frame.eps(alpha));
        let jm = frame.j(alpha);
        for idx in indices(3) {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let lhs = f.get(&[i, j, k]).clone();
            let swapped = f.get(&[i, k, j]).scale(&-eps.clone());
            if lhs != swapped {
                return false;
            }
            let mut twisted = Poly::zero(f.vars());
            for p in 0..DIM {
                for q in 0..DIM {
                    let cp = jm.at(p, j);
                    let cq = jm.at(q, k);
                    if !cp.is_zero() && !cq.is_zero() {
                        twisted = &twisted + &f.get(&[i, p, q]).scale(&(cp * cq));
                    }
                }
            }
            if lhs != twisted.scale(&-eps.clone()) {
                return false;
            }
        }
        true
    }

    /// F_alpha(x,y,z) = F_beta(x, J_gamma y, z) - eps_beta F_gamma(x, y, J_beta z)
    /// for all cyclic (alpha, beta, gamma). The sign comes from expanding
    /// nabla(J_beta J_gamma) by the product rule and moving J_beta across g,
    /// which costs -eps_beta.
    pub fn f_cyclic_relation(
        fs: &[ComponentTensor; 3],
        frame: &HNFrame,
        alpha: usize,
        beta: usize,
        gamma: usize,
    ) -> bool {
        let eps = crate::exactalg::rat_int(frame.eps(beta));
        let jb = frame.j(beta);
        let jg = frame.j(gamma);
        let fa = &fs[alpha - 1];
        let fb = &fs[beta - 1];
        let fg = &fs[gamma - 1];
        for idx in indices(3) {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let mut rhs = Poly::zero(fa.vars());
            for p in 0..DIM {
                if !jg.at(p, j).is_zero() {
                    rhs = &rhs + &fb.get(&[i, p, k]).scale(jg.at(p, j));
                }
                if !jb.at(p, k).is_zero() {
                    rhs = &rhs - &fg.get(&[i, j, p]).scale(&(jb.at(p, k) * &eps));
                }
            }
            if fa.get(&[i, j, k]) != &rhs {
                return false;
            }
        }
        true
    }

    /// N(x,y) = -N(y,x) = -N(J x, J y), on the lowered tensor.
    pub fn n_symmetries(n: &ComponentTensor, frame: &HNFrame, alpha: usize) -> bool {
        let jm = frame.j(alpha);
        for idx in indices(3) {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            if n.get(&[i, j, k]) != &n.get(&[j, i, k]).negated() {
                return false;
            }
            let mut twisted = Poly::zero(n.vars());
            for p in 0..DIM {
                for q in 0..DIM {
                    let cp = jm.at(p, i);
                    let cq = jm.at(q, j);
                    if !cp.is_zero() && !cq.is_zero() {
                        twisted = &twisted + &n.get(&[p, q, k]).scale(&(cp * cq));
                    }
                }
            }
            if n.get(&[i, j, k]) != &twisted.negated() {
                return false;
            }
        }
        true
    }
}

/// Connection plus all structural tensors of one algebra.
pub struct StructuralTensors {
    pub connection: Connection,
    pub f: [ComponentTensor; 3],
    pub theta: [ComponentTensor; 3],
    pub nijenhuis: [ComponentTensor; 3],
}

/// Computes the connection, F_alpha, theta_alpha and N_alpha for an algebra
/// that satisfies the Jacobi identity.
pub fn structural_tensors(alg: &LieAlgebraSpec, frame: &HNFrame) -> Result<StructuralTensors> {
    if let Some(v) = alg.jacobi_violations().first() {
        return Err(Error::JacobiViolation(v.triple.0, v.triple.1, v.triple.2));
    }
    let connection = levi_civita(alg, frame);
    let f: [ComponentTensor; 3] =
        std::array::from_fn(|a| fundamental_tensor(&connection, frame, a + 1));
    let theta: [ComponentTensor; 3] = std::array::from_fn(|a| lee_form(&f[a], frame));
    let nij: [ComponentTensor; 3] = std::array::from_fn(|a| nijenhuis(&connection, frame, a + 1));
    Ok(StructuralTensors {
        connection,
        f,
        theta,
        nijenhuis: nij,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hnstruct::standard_frame;
    use crate::liealg::catalog;

    fn poly(s: &str) -> Poly {
        Poly::parse(&VarSet::ab(), s).unwrap()
    }

    #[test]
    fn g45_connection_matches_hand_koszul() {
        let alg = catalog::g4_5();
        let conn = levi_civita(&alg, &standard_frame());
        // nabla_{e1} e1 = e4: only the z = e4 Koszul term survives,
        // 2 g(nabla_{e1} e1, e4) = 2 g([e4,e1], e1) = -2, raised with g44 = -1.
        assert_eq!(conn.gamma(0, 0, 3), &poly("1"));
        // nabla_{e4} e4 = 0: all three Koszul terms vanish.
        for k in 0..DIM {
            assert!(conn.gamma(3, 3, k).is_zero());
        }
        // The full nonzero table.
        assert_eq!(conn.gamma(0, 3, 0), &poly("1"));
        assert_eq!(conn.gamma(1, 1, 3), &poly("a"));
        assert_eq!(conn.gamma(1, 3, 1), &poly("a"));
        assert_eq!(conn.gamma(2, 2, 3), &poly("-b"));
        assert_eq!(conn.gamma(2, 3, 2), &poly("b"));
        let mut nonzero = 0;
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if !conn.gamma(i, j, k).is_zero() {
                        nonzero += 1;
                    }
                }
            }
        }
        assert_eq!(nonzero, 6);
    }

    #[test]
    fn abelian_connection_is_flat() {
        let conn = levi_civita(&catalog::abelian(), &standard_frame());
        for i in 0..DIM {
            for j in 0..DIM {
                assert!(conn.nabla_basis(i, j).iter().all(Poly::is_zero));
            }
        }
    }

    #[test]
    fn connection_is_torsion_free_and_metric() {
        let frame = standard_frame();
        for alg in [catalog::g4_5(), catalog::g4_6()] {
            let conn = levi_civita(&alg, &frame);
            assert!(identities::torsion_free(&conn, &alg));
            assert!(identities::metric_compatible(&conn, &frame));
        }
    }

    #[test]
    fn g45_fundamental_components() {
        let frame = standard_frame();
        let conn = levi_civita(&catalog::g4_5(), &frame);
        let f1 = fundamental_tensor(&conn, &frame, 1);
        let f2 = fundamental_tensor(&conn, &frame, 2);
        let f3 = fundamental_tensor(&conn, &frame, 3);
        assert_eq!(f1.get(&[0, 0, 2]), &poly("1"));
        assert_eq!(f2.get(&[0, 0, 1]), &poly("1"));
        assert_eq!(f3.get(&[0, 0, 0]), &poly("-2"));
        assert_eq!(f1.get(&[1, 0, 3]), &poly("-a"));
        assert_eq!(f3.get(&[1, 0, 1]), &poly("-a"));
        assert_eq!(f2.get(&[1, 1, 1]), &poly("2*a"));
        assert_eq!(f2.get(&[2, 0, 3]), &poly("b"));
        assert_eq!(f3.get(&[2, 0, 2]), &poly("b"));
    }

    #[test]
    fn g46_fundamental_components() {
        let frame = standard_frame();
        let conn = levi_civita(&catalog::g4_6(), &frame);
        let f1 = fundamental_tensor(&conn, &frame, 1);
        let f2 = fundamental_tensor(&conn, &frame, 2);
        assert_eq!(f1.get(&[1, 1, 2]), &poly("b"));
        assert_eq!(f2.get(&[2, 0, 3]), &poly("b"));
        assert_eq!(f2.get(&[2, 1, 1]), &poly("2"));
        assert_eq!(f2.get(&[1, 1, 1]), &poly("2*b"));
        assert_eq!(f1.get(&[0, 0, 2]), &poly("a"));
    }

    #[test]
    fn lee_form_values() {
        let frame = standard_frame();
        let conn = levi_civita(&catalog::g4_5(), &frame);
        let theta1 = lee_form(&fundamental_tensor(&conn, &frame, 1), &frame);
        assert_eq!(theta1.get(&[2]), &poly("a + 1"));

        let conn6 = levi_civita(&catalog::g4_6(), &frame);
        let theta2 = lee_form(&fundamental_tensor(&conn6, &frame, 2), &frame);
        assert_eq!(theta2.get(&[1]), &poly("a + 3*b"));
    }

    #[test]
    fn abelian_structural_tensors_vanish() {
        let frame = standard_frame();
        let t = structural_tensors(&catalog::abelian(), &frame).unwrap();
        for a in 0..3 {
            assert!(t.f[a].is_zero());
            assert!(t.theta[a].is_zero());
            assert!(t.nijenhuis[a].is_zero());
        }
    }

    #[test]
    fn g45_nijenhuis_components_and_integrable_point() {
        let frame = standard_frame();
        let conn = levi_civita(&catalog::g4_5(), &frame);
        let n1 = nijenhuis(&conn, &frame, 1);
        assert_eq!(n1.get(&[0, 2, 1]), &poly("1 - a"));
        assert_eq!(n1.get(&[1, 2, 0]), &poly("1 - a"));

        // At a = b = 1 every Nijenhuis tensor vanishes.
        let at: BTreeMap<String, Rational> = [
            ("a".to_string(), crate::exactalg::rat_int(1)),
            ("b".to_string(), crate::exactalg::rat_int(1)),
        ]
        .into();
        for alpha in 1..=3 {
            let n = nijenhuis(&conn, &frame, alpha);
            assert!(n.eval(&at).unwrap().is_zero());
        }
    }

    #[test]
    fn g46_nijenhuis_components() {
        let frame = standard_frame();
        let conn = levi_civita(&catalog::g4_6(), &frame);
        let n1 = nijenhuis(&conn, &frame, 1);
        let n3 = nijenhuis(&conn, &frame, 3);
        assert_eq!(n1.get(&[0, 2, 2]), &poly("-1"));
        assert_eq!(n1.get(&[1, 2, 3]), &poly("-1"));
        assert!(n3.is_zero());
    }

    #[test]
    fn structural_identities_hold_for_both_catalog_algebras() {
        let frame = standard_frame();
        for alg in [catalog::g4_5(), catalog::g4_6()] {
            let t = structural_tensors(&alg, &frame).unwrap();
            for alpha in 1..=3 {
                assert!(identities::f_symmetries(&t.f[alpha - 1], &frame, alpha));
                assert!(identities::n_symmetries(
                    &t.nijenhuis[alpha - 1],
                    &frame,
                    alpha
                ));
            }
            for (alpha, beta, gamma) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
                assert!(identities::f_cyclic_relation(&t.f, &frame, alpha, beta, gamma));
            }
        }
    }

    #[test]
    fn rejects_non_jacobi_algebra() {
        let vars = VarSet::ab();
        let zero = || Poly::zero(&vars);
        let alg = crate::liealg::LieAlgebraSpec::new(
            "broken",
            &vars,
            &[
                (1, 4, [Poly::one(&vars), zero(), zero(), zero()]),
                (1, 2, [zero(), zero(), Poly::one(&vars), zero()]),
            ],
            Vec::new(),
        )
        .unwrap();
        assert!(matches!(
            structural_tensors(&alg, &standard_frame()),
            Err(Error::JacobiViolation(..))
        ));
    }
}
