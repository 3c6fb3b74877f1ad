//! Dense matrices over the rationals with fraction-exact elimination.

use num_traits::{One, Zero};

use super::poly::{Poly, VarSet};
use super::rational::Rational;
use crate::Error;

/// Dense rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = RatMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        RatMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                if !self.at(i, k).is_zero() && !other.at(k, j).is_zero() {
                    acc += self.at(i, k) * other.at(k, j);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    if !self.at(i, k).is_zero() && !v[k].is_zero() {
                        acc += self.at(i, k) * &v[k];
                    }
                }
                acc
            })
            .collect()
    }

    /// Rational matrix acting on a vector of polynomials.
    pub fn mul_poly_vec(&self, v: &[Poly], vars: &VarSet) -> Vec<Poly> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = Poly::zero(vars);
                for k in 0..self.cols {
                    if !self.at(i, k).is_zero() && !v[k].is_zero() {
                        acc = &acc + &v[k].scale(self.at(i, k));
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form with the pivot column list.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = match (row..m.rows).find(|&r| !m.at(r, col).is_zero()) {
                Some(r) => r,
                None => continue,
            };
            if pivot_row != row {
                for j in 0..m.cols {
                    m.data.swap(pivot_row * m.cols + j, row * m.cols + j);
                }
            }
            let inv = Rational::one() / m.at(row, col).clone();
            for j in col..m.cols {
                let v = m.at(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for j in col..m.cols {
                        let v = m.at(r, j) - &(m.at(row, j) * &factor);
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the kernel; the empty list for a trivial kernel.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r.at(prow, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(RatMatrix::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }
}

/// Idempotent projector onto `span(subspace)` along `span(complement)`.
///
/// The concatenated vectors must be jointly independent; when they do not
/// span the whole ambient space, the remaining directions are completed by
/// standard basis vectors and also annihilated, which keeps P exactly
/// idempotent.
pub fn projector_onto(
    subspace: &[Vec<Rational>],
    complement: &[Vec<Rational>],
) -> Result<RatMatrix, Error> {
    let n = subspace
        .first()
        .or_else(|| complement.first())
        .map(|v| v.len())
        .ok_or_else(|| Error::MatrixShape("empty projector input".into()))?;
    if subspace.iter().chain(complement).any(|v| v.len() != n) {
        return Err(Error::MatrixShape("projector vectors of unequal length".into()));
    }
    let s = subspace.len();
    let k = complement.len();
    let mut columns: Vec<Vec<Rational>> = subspace.iter().chain(complement).cloned().collect();

    let stacked = RatMatrix::from_rows(columns.clone()).transpose();
    if stacked.rank() != s + k {
        return Err(Error::NotIndependent);
    }

    // Complete to a basis of the ambient space with standard vectors.
    for i in 0..n {
        if columns.len() == n {
            break;
        }
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        let mut trial = columns.clone();
        trial.push(e.clone());
        if RatMatrix::from_rows(trial).transpose().rank() == columns.len() + 1 {
            columns.push(e);
        }
    }
    debug_assert_eq!(columns.len(), n);

    let c = RatMatrix::from_rows(columns).transpose();
    let c_inv = c.inverse().expect("completed basis is invertible");
    let mut selector = RatMatrix::zeros(n, n);
    for i in 0..s {
        selector.set(i, i, Rational::one());
    }
    Ok(c.mul(&selector).mul(&c_inv))
}

/// Solves coordinates with respect to a fixed independent set of vectors,
/// with an exact residual check. Built once, reused for many right-hand
/// sides (rational or polynomial).
pub struct BasisSolver {
    basis: Vec<Vec<Rational>>,
    ambient: usize,
    pivot_rows: Vec<usize>,
    inv: RatMatrix,
}

impl BasisSolver {
    pub fn new(basis: &[Vec<Rational>]) -> Result<Self, Error> {
        let m = basis.len();
        let ambient = basis
            .first()
            .map(|v| v.len())
            .ok_or_else(|| Error::MatrixShape("empty basis".into()))?;
        if basis.iter().any(|v| v.len() != ambient) {
            return Err(Error::MatrixShape("basis vectors of unequal length".into()));
        }
        // Pivot rows of the (ambient x m) column matrix: found via the rref
        // of its transpose.
        let (_, pivot_rows) = RatMatrix::from_rows(basis.to_vec()).rref();
        if pivot_rows.len() != m {
            return Err(Error::NotIndependent);
        }
        let square = RatMatrix::from_fn(m, m, |i, j| basis[j][pivot_rows[i]].clone());
        let inv = square.inverse().ok_or(Error::NotIndependent)?;
        Ok(BasisSolver {
            basis: basis.to_vec(),
            ambient,
            pivot_rows,
            inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coordinates of `v` in the basis; errors when `v` is outside the span.
    pub fn solve(&self, v: &[Rational]) -> Result<Vec<Rational>, Error> {
        assert_eq!(v.len(), self.ambient);
        let rhs: Vec<Rational> = self.pivot_rows.iter().map(|&r| v[r].clone()).collect();
        let coords = self.inv.mul_vec(&rhs);
        // Residual check over all ambient components.
        for row in 0..self.ambient {
            let mut acc = Rational::zero();
            for (j, b) in self.basis.iter().enumerate() {
                if !coords[j].is_zero() && !b[row].is_zero() {
                    acc += &coords[j] * &b[row];
                }
            }
            if acc != v[row] {
                return Err(Error::OutsideSpan);
            }
        }
        Ok(coords)
    }

    /// Same as [`BasisSolver::solve`] for a polynomial-valued vector.
    pub fn solve_poly(&self, v: &[Poly], vars: &VarSet) -> Result<Vec<Poly>, Error> {
        assert_eq!(v.len(), self.ambient);
        let rhs: Vec<Poly> = self.pivot_rows.iter().map(|&r| v[r].clone()).collect();
        let coords = self.inv.mul_poly_vec(&rhs, vars);
        for row in 0..self.ambient {
            let mut acc = Poly::zero(vars);
            for (j, b) in self.basis.iter().enumerate() {
                if !coords[j].is_zero() && !b[row].is_zero() {
                    acc = &acc + &coords[j].scale(&b[row]);
                }
            }
            if acc != v[row] {
                return Err(Error::OutsideSpan);
            }
        }
        Ok(coords)
    }

    /// Reconstructs the ambient vector from coordinates.
    pub fn expand_poly(&self, coords: &[Poly], vars: &VarSet) -> Vec<Poly> {
        assert_eq!(coords.len(), self.basis.len());
        let mut out = vec![Poly::zero(vars); self.ambient];
        for (j, b) in self.basis.iter().enumerate() {
            if coords[j].is_zero() {
                continue;
            }
            for (row, entry) in b.iter().enumerate() {
                if !entry.is_zero() {
                    out[row] = &out[row] + &coords[j].scale(entry);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).nullspace().is_empty());
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        let basis = RatMatrix::zeros(2, 2).nullspace();
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn kernel_vectors_satisfy_mk_eq_zero() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        let basis = a.nullspace();
        assert_eq!(basis.len(), 1);
        for k in &basis {
            assert!(a.mul_vec(k).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn inverse_round_trip_with_fractions() {
        let a = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat_int(1)],
            vec![rat_int(3), rat(-2, 5)],
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn projector_matches_spec_example() {
        let s = vec![vec![rat_int(1), rat_int(0)]];
        let k = vec![vec![rat_int(0), rat_int(1)]];
        let p = projector_onto(&s, &k).unwrap();
        assert_eq!(p, m(&[&[1, 0], &[0, 0]]));
    }

    #[test]
    fn projector_is_idempotent_on_skew_basis() {
        let s = vec![vec![rat_int(1), rat_int(1), rat_int(0)]];
        let k = vec![vec![rat_int(1), rat_int(-1), rat_int(2)]];
        let p = projector_onto(&s, &k).unwrap();
        assert_eq!(p.mul(&p), p);
        assert_eq!(p.mul_vec(&s[0]), s[0]);
        assert!(p.mul_vec(&k[0]).iter().all(Rational::is_zero));
    }

    #[test]
    fn projector_rejects_dependent_input() {
        let s = vec![vec![rat_int(1), rat_int(0)]];
        let k = vec![vec![rat_int(2), rat_int(0)]];
        assert!(matches!(projector_onto(&s, &k), Err(Error::NotIndependent)));
    }

    #[test]
    fn basis_solver_solves_and_rejects() {
        let basis = vec![
            vec![rat_int(1), rat_int(0), rat_int(2)],
            vec![rat_int(0), rat_int(1), rat_int(1)],
        ];
        let solver = BasisSolver::new(&basis).unwrap();
        let coords = solver
            .solve(&[rat_int(2), rat_int(3), rat_int(7)])
            .unwrap();
        assert_eq!(coords, vec![rat_int(2), rat_int(3)]);
        assert!(matches!(
            solver.solve(&[rat_int(1), rat_int(0), rat_int(0)]),
            Err(Error::OutsideSpan)
        ));
    }
}
