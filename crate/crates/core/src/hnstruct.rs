//! The fixed standard hypercomplex triple (J1, J2, J3), the neutral metric
//! g = diag(1, 1, -1, -1), the signs eps = (+1, -1, -1), and the associated
//! metrics g_alpha(x, y) = g(J_alpha x, y).

use num_traits::{One, Zero};

use crate::exactalg::{rat_int, RatMatrix, Rational};
use crate::{Error, Result, DIM};

/// The standard frame data. All later tensors are component arrays in this
/// frame, so the triple, the signs and the metric are fixed at construction
/// and verified against every structural identity they must satisfy.
#[derive(Clone, Debug)]
pub struct HNFrame {
    j: [RatMatrix; 3],
    eps: [i64; 3],
    g: RatMatrix,
    g_assoc: [RatMatrix; 3],
    g_inv: RatMatrix,
}

/// Classification of a basic coordinate plane relative to one J_alpha.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneType {
    Holomorphic,
    TotallyReal,
    Generic,
}

impl std::fmt::Display for PlaneType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlaneType::Holomorphic => write!(f, "holomorphic"),
            PlaneType::TotallyReal => write!(f, "totally_real"),
            PlaneType::Generic => write!(f, "generic"),
        }
    }
}

/// Coordinate 2-plane span{e_i, e_j}, 1-based with i < j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Plane {
    pub i: usize,
    pub j: usize,
}

impl Plane {
    pub fn new(i: usize, j: usize) -> Result<Plane> {
        if !(1..=DIM).contains(&i) || !(1..=DIM).contains(&j) || i >= j {
            return Err(Error::Invalid(format!(
                "plane indices ({i}, {j}) must satisfy 1 <= i < j <= 4"
            )));
        }
        Ok(Plane { i, j })
    }

    /// The six basic coordinate planes in lexicographic order.
    pub fn basic_planes() -> Vec<Plane> {
        let mut planes = Vec::new();
        for i in 1..=DIM {
            for j in (i + 1)..=DIM {
                planes.push(Plane { i, j });
            }
        }
        planes
    }
}

/// Builds the standard frame. Column i of J_alpha holds the coordinates of
/// J_alpha e_i:
///
/// ```text
/// J1 e1 =  e2   J1 e2 = -e1   J1 e3 = -e4   J1 e4 =  e3
/// J2 e1 =  e3   J2 e2 =  e4   J2 e3 = -e1   J2 e4 = -e2
/// J3 e1 = -e4   J3 e2 =  e3   J3 e3 = -e2   J3 e4 =  e1
/// ```
pub fn standard_frame() -> HNFrame {
    let col = |entries: [(usize, i64); 4]| {
        let mut m = RatMatrix::zeros(DIM, DIM);
        for (i, (row, sign)) in entries.iter().enumerate() {
            m.set(*row, i, rat_int(*sign));
        }
        m
    };
    // (row, sign) per column: J e_col = sign * e_row.
    let j1 = col([(1, 1), (0, -1), (3, -1), (2, 1)]);
    let j2 = col([(2, 1), (3, 1), (0, -1), (1, -1)]);
    let j3 = col([(3, -1), (2, 1), (1, -1), (0, 1)]);

    let mut g = RatMatrix::zeros(DIM, DIM);
    for (i, sign) in [1i64, 1, -1, -1].iter().enumerate() {
        g.set(i, i, rat_int(*sign));
    }
    let g_inv = g.inverse().expect("the neutral metric is invertible");

    let eps = [1i64, -1, -1];
    let j = [j1, j2, j3];
    // (g_alpha)_{ik} = g(J_alpha e_i, e_k) = (J_alpha^T G)_{ik}.
    let g_assoc = [
        j[0].transpose().mul(&g),
        j[1].transpose().mul(&g),
        j[2].transpose().mul(&g),
    ];

    let frame = HNFrame {
        j,
        eps,
        g,
        g_assoc,
        g_inv,
    };
    frame.verify().expect("standard frame invariants");
    frame
}

impl HNFrame {
    /// J_alpha as a matrix, alpha in 1..=3.
    pub fn j(&self, alpha: usize) -> &RatMatrix {
        &self.j[alpha - 1]
    }

    /// eps_alpha: +1 for alpha = 1 (Hermitian), -1 for alpha = 2, 3 (Norden).
    pub fn eps(&self, alpha: usize) -> i64 {
        self.eps[alpha - 1]
    }

    pub fn metric(&self) -> &RatMatrix {
        &self.g
    }

    pub fn metric_inv(&self) -> &RatMatrix {
        &self.g_inv
    }

    /// Associated tensor g_alpha; g_1 is the Kaehler 2-form, g_2 and g_3
    /// are the Norden-type neutral metrics.
    pub fn assoc_metric(&self, alpha: usize) -> &RatMatrix {
        &self.g_assoc[alpha - 1]
    }

    /// g(e_i, e_j), 0-based.
    pub fn g_at(&self, i: usize, j: usize) -> &Rational {
        self.g.at(i, j)
    }

    /// Image of the basis vector e_i (0-based) under J_alpha, as the signed
    /// basis pair (index, sign). The standard triple consists of signed
    /// permutations, so this is always well-defined.
    pub fn j_basis_image(&self, alpha: usize, i: usize) -> (usize, i64) {
        let col = self.j(alpha).column(i);
        for (row, v) in col.iter().enumerate() {
            if !v.is_zero() {
                let sign = if *v == rat_int(1) { 1 } else { -1 };
                return (row, sign);
            }
        }
        unreachable!("J_alpha columns are nonzero")
    }

    fn verify(&self) -> Result<()> {
        let id = RatMatrix::identity(DIM);
        let neg_id = {
            let mut m = RatMatrix::zeros(DIM, DIM);
            for i in 0..DIM {
                m.set(i, i, rat_int(-1));
            }
            m
        };
        // J_alpha^2 = -I and the quaternionic relations for all cyclic
        // permutations (alpha, beta, gamma).
        for alpha in 0..3 {
            if self.j[alpha].mul(&self.j[alpha]) != neg_id {
                return Err(Error::Invalid(format!("J{}^2 != -I", alpha + 1)));
            }
        }
        for (alpha, beta, gamma) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            if self.j[alpha] != self.j[beta].mul(&self.j[gamma]) {
                return Err(Error::Invalid("J_alpha != J_beta J_gamma".into()));
            }
            if self.j[gamma].mul(&self.j[beta]) != neg_id.mul(&self.j[alpha]) {
                return Err(Error::Invalid("J_gamma J_beta != -J_alpha".into()));
            }
        }
        // Compatibility g(x, y) = eps_alpha g(J x, J y), i.e.
        // J^T G J = eps G, and the associated-tensor relation
        // g_alpha(x, y) = -eps_alpha g(x, J_alpha y), i.e. G J = -eps J^T G.
        for alpha in 0..3 {
            let jtgj = self.j[alpha].transpose().mul(&self.g).mul(&self.j[alpha]);
            let scaled = scale(&self.g, self.eps[alpha]);
            if jtgj != scaled {
                return Err(Error::Invalid(format!(
                    "metric compatibility fails for alpha = {}",
                    alpha + 1
                )));
            }
            let gj = scale(&self.g.mul(&self.j[alpha]), -self.eps[alpha]);
            if self.g_assoc[alpha] != gj {
                return Err(Error::Invalid(format!(
                    "associated metric relation fails for alpha = {}",
                    alpha + 1
                )));
            }
        }
        if self.g_inv.mul(&self.g) != id {
            return Err(Error::Invalid("g_inv g != I".into()));
        }
        Ok(())
    }

    /// Gram determinant g(ei,ei) g(ej,ej) - g(ei,ej)^2 of a basic plane.
    pub fn gram(&self, plane: Plane) -> Rational {
        let (i, j) = (plane.i - 1, plane.j - 1);
        self.g_at(i, i) * self.g_at(j, j) - &(self.g_at(i, j) * self.g_at(i, j))
    }

    /// Type of the plane relative to J_alpha: holomorphic when J mu = mu,
    /// totally real when mu is g-orthogonal to J mu != mu.
    pub fn plane_type(&self, plane: Plane, alpha: usize) -> Result<PlaneType> {
        if self.gram(plane).is_zero() {
            return Err(Error::DegeneratePlane(plane.i, plane.j));
        }
        let (i, j) = (plane.i - 1, plane.j - 1);
        let ji = self.j(alpha).column(i);
        let jj = self.j(alpha).column(j);
        let mut ei = vec![Rational::zero(); DIM];
        ei[i] = Rational::one();
        let mut ej = vec![Rational::zero(); DIM];
        ej[j] = Rational::one();

        // J mu = mu exactly when [e_i, e_j, J e_i, J e_j] has rank 2.
        let rank = RatMatrix::from_rows(vec![ei.clone(), ej.clone(), ji.clone(), jj.clone()])
            .rank();
        if rank == 2 {
            return Ok(PlaneType::Holomorphic);
        }
        let pairing = |x: &[Rational], y: &[Rational]| -> Rational {
            let mut acc = Rational::zero();
            for r in 0..DIM {
                for c in 0..DIM {
                    if !x[r].is_zero() && !y[c].is_zero() {
                        acc += &x[r] * self.g_at(r, c) * &y[c];
                    }
                }
            }
            acc
        };
        let orthogonal = pairing(&ei, &ji).is_zero()
            && pairing(&ei, &jj).is_zero()
            && pairing(&ej, &ji).is_zero()
            && pairing(&ej, &jj).is_zero();
        if orthogonal {
            Ok(PlaneType::TotallyReal)
        } else {
            Ok(PlaneType::Generic)
        }
    }
}

fn scale(m: &RatMatrix, factor: i64) -> RatMatrix {
    RatMatrix::from_fn(m.rows(), m.cols(), |i, j| m.at(i, j) * rat_int(factor))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j1_sends_e3_to_minus_e4() {
        let frame = standard_frame();
        let col = frame.j(1).column(2);
        assert_eq!(col[3], rat_int(-1));
        assert!(col[0].is_zero() && col[1].is_zero() && col[2].is_zero());
    }

    #[test]
    fn metric_is_neutral_diagonal() {
        let frame = standard_frame();
        assert_eq!(*frame.g_at(2, 2), rat_int(-1));
        assert_eq!(*frame.g_at(0, 0), rat_int(1));
    }

    #[test]
    fn j2_compose_j3_is_j1() {
        let frame = standard_frame();
        assert_eq!(frame.j(2).mul(frame.j(3)), *frame.j(1));
    }

    #[test]
    fn associated_metric_entries() {
        let frame = standard_frame();
        // g1(e1, e2) = g(J1 e1, e2) = g(e2, e2) = 1.
        assert_eq!(*frame.assoc_metric(1).at(0, 1), rat_int(1));
        // g2(e1, e3) = g(J2 e1, e3) = g(e3, e3) = -1.
        assert_eq!(*frame.assoc_metric(2).at(0, 2), rat_int(-1));
    }

    #[test]
    fn kaehler_form_is_antisymmetric_norden_metrics_symmetric() {
        let frame = standard_frame();
        let g1 = frame.assoc_metric(1);
        for i in 0..DIM {
            for j in 0..DIM {
                assert_eq!(*g1.at(i, j), -g1.at(j, i).clone());
            }
        }
        for alpha in [2, 3] {
            let ga = frame.assoc_metric(alpha);
            assert_eq!(ga.transpose(), *ga);
        }
    }

    #[test]
    fn plane_types_of_spec_examples() {
        let frame = standard_frame();
        let p12 = Plane::new(1, 2).unwrap();
        let p13 = Plane::new(1, 3).unwrap();
        assert_eq!(frame.plane_type(p12, 1).unwrap(), PlaneType::Holomorphic);
        assert_eq!(frame.plane_type(p13, 1).unwrap(), PlaneType::TotallyReal);
        assert_eq!(frame.plane_type(p13, 2).unwrap(), PlaneType::Holomorphic);
    }

    #[test]
    fn every_basic_plane_is_holomorphic_or_totally_real() {
        let frame = standard_frame();
        for plane in Plane::basic_planes() {
            for alpha in 1..=3 {
                let t = frame.plane_type(plane, alpha).unwrap();
                assert_ne!(t, PlaneType::Generic, "plane {plane:?}, alpha {alpha}");
            }
        }
    }

    #[test]
    fn plane_validation() {
        assert!(Plane::new(2, 2).is_err());
        assert!(Plane::new(0, 1).is_err());
        assert!(Plane::new(3, 4).is_ok());
    }
}
