//! 4-dimensional real Lie algebras given by structure constants with
//! symbolic entries, Jacobi verification, the built-in two-parameter
//! catalog, and the algebra definition file format.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactalg::{Poly, Rational, VarSet};
use crate::{Error, Result, DIM};

/// Vector in the fixed frame {e1, e2, e3, e4} with polynomial components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector(pub [Poly; 4]);

impl Vector {
    pub fn zero(vars: &VarSet) -> Self {
        Vector(std::array::from_fn(|_| Poly::zero(vars)))
    }

    /// The basis vector `e_{i+1}` (0-based index).
    pub fn basis(vars: &VarSet, i: usize) -> Self {
        let mut v = Vector::zero(vars);
        v.0[i] = Poly::one(vars);
        v
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(std::array::from_fn(|i| &self.0[i] + &other.0[i]))
    }

    pub fn scale(&self, factor: &Poly) -> Vector {
        Vector(std::array::from_fn(|i| &self.0[i] * factor))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly::is_zero)
    }
}

/// Domain constraint attached to an algebra's parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// The polynomial must not vanish (`a != 0`).
    NonZero(Poly),
    /// The named parameter must be nonnegative (`b >= 0`).
    NonNegative(String),
}

impl Constraint {
    pub fn parse(vars: &VarSet, s: &str) -> Result<Constraint> {
        if let Some((lhs, rhs)) = s.split_once("!=") {
            if rhs.trim() != "0" {
                return Err(Error::BadAlgebraFile(format!(
                    "constraint `{s}` must compare against 0"
                )));
            }
            let p = Poly::parse(vars, lhs.trim())?;
            if p.is_zero() {
                return Err(Error::BadAlgebraFile(format!(
                    "constraint `{s}` is identically false"
                )));
            }
            return Ok(Constraint::NonZero(p));
        }
        if let Some((lhs, rhs)) = s.split_once(">=") {
            if rhs.trim() != "0" {
                return Err(Error::BadAlgebraFile(format!(
                    "constraint `{s}` must compare against 0"
                )));
            }
            let name = lhs.trim();
            if vars.index_of(name).is_none() {
                return Err(Error::UnknownVariable(name.to_string()));
            }
            return Ok(Constraint::NonNegative(name.to_string()));
        }
        Err(Error::BadAlgebraFile(format!(
            "constraint `{s}` is neither `poly != 0` nor `param >= 0`"
        )))
    }

    /// Exact check at a parameter point.
    pub fn satisfied(&self, assignment: &BTreeMap<String, Rational>) -> Result<bool> {
        match self {
            Constraint::NonZero(p) => Ok(!p.eval(assignment)?.is_zero()),
            Constraint::NonNegative(name) => {
                let v = assignment
                    .get(name)
                    .ok_or_else(|| Error::MissingAssignment(name.clone()))?;
                Ok(*v >= Rational::zero())
            }
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::NonZero(p) => write!(f, "{p} != 0"),
            Constraint::NonNegative(name) => write!(f, "{name} >= 0"),
        }
    }
}

/// A 4-dimensional real Lie algebra presented by structure constants
/// `[e_i, e_j] = sum_k c[i][j][k] e_k` with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraSpec {
    name: String,
    vars: VarSet,
    /// Dense constants, index (i*4 + j)*4 + k, all 0-based.
    c: Vec<Poly>,
    constraints: Vec<Constraint>,
}

/// A failed Jacobi triple together with its nonzero residual.
#[derive(Clone, Debug)]
pub struct JacobiViolation {
    /// 1-based basis indices (i, j, k).
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

impl LieAlgebraSpec {
    /// Builds a spec from `i < j` bracket entries (1-based indices); the
    /// antisymmetric counterparts are filled in automatically.
    pub fn new(
        name: &str,
        vars: &VarSet,
        brackets: &[(usize, usize, [Poly; 4])],
        constraints: Vec<Constraint>,
    ) -> Result<Self> {
        let mut c = vec![Poly::zero(vars); DIM * DIM * DIM];
        let mut seen = Vec::new();
        for (i1, j1, coeffs) in brackets {
            let (i, j) = (*i1, *j1);
            if !(1..=DIM).contains(&i) || !(1..=DIM).contains(&j) || i >= j {
                return Err(Error::BadAlgebraFile(format!(
                    "bracket entry ({i}, {j}) must satisfy 1 <= i < j <= 4"
                )));
            }
            if seen.contains(&(i, j)) {
                return Err(Error::AntisymmetryConflict { i, j });
            }
            seen.push((i, j));
            for (k, p) in coeffs.iter().enumerate() {
                c[Self::idx(i - 1, j - 1, k)] = p.clone();
                c[Self::idx(j - 1, i - 1, k)] = p.negated();
            }
        }
        Ok(LieAlgebraSpec {
            name: name.to_string(),
            vars: vars.clone(),
            c,
            constraints,
        })
    }

    fn idx(i: usize, j: usize, k: usize) -> usize {
        (i * DIM + j) * DIM + k
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Structure constant c[i][j][k], 0-based.
    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Poly {
        &self.c[Self::idx(i, j, k)]
    }

    /// `[e_i, e_j]` as a frame vector (0-based indices).
    pub fn bracket_of_basis(&self, i: usize, j: usize) -> Vector {
        Vector(std::array::from_fn(|k| self.structure(i, j, k).clone()))
    }

    /// Bilinear, antisymmetric extension of the structure constants.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(&self.vars);
        for i in 0..DIM {
            if x.0[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y.0[j].is_zero() {
                    continue;
                }
                let factor = &x.0[i] * &y.0[j];
                for k in 0..DIM {
                    let cijk = self.structure(i, j, k);
                    if !cijk.is_zero() {
                        out.0[k] = &out.0[k] + &(&factor * cijk);
                    }
                }
            }
        }
        out
    }

    /// All basis triples whose cyclic Jacobi sum fails to vanish
    /// identically. Violations are data, not errors.
    pub fn jacobi_violations(&self) -> Vec<JacobiViolation> {
        let mut violations = Vec::new();
        for i in 0..DIM {
            for j in (i + 1)..DIM {
                for k in (j + 1)..DIM {
                    let mut residual = Vector::zero(&self.vars);
                    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket_of_basis(x, y);
                        let ez = Vector::basis(&self.vars, z);
                        residual = residual.add(&self.bracket(&inner, &ez));
                    }
                    if !residual.is_zero() {
                        violations.push(JacobiViolation {
                            triple: (i + 1, j + 1, k + 1),
                            residual,
                        });
                    }
                }
            }
        }
        violations
    }

    /// Errors with the violated constraint's text when the assignment
    /// leaves the admissible parameter domain.
    pub fn check_constraints(&self, assignment: &BTreeMap<String, Rational>) -> Result<()> {
        for constraint in &self.constraints {
            if !constraint.satisfied(assignment)? {
                return Err(Error::DomainViolation(constraint.to_string()));
            }
        }
        Ok(())
    }

    /// Bracket entries `(i, j, coeffs)` with `i < j` (1-based) that carry a
    /// nonzero coefficient vector.
    pub fn bracket_entries(&self) -> Vec<(usize, usize, [Poly; 4])> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in (i + 1)..DIM {
                let v = self.bracket_of_basis(i, j);
                if !v.is_zero() {
                    out.push((i + 1, j + 1, v.0));
                }
            }
        }
        out
    }

    /// Serializes to the algebra definition file format.
    pub fn to_toml_string(&self) -> String {
        let file = AlgebraFile {
            name: self.name.clone(),
            params: self.vars.names().to_vec(),
            constraints: self.constraints.iter().map(|c| c.to_string()).collect(),
            brackets: self
                .bracket_entries()
                .into_iter()
                .map(|(i, j, coeffs)| BracketEntry {
                    i,
                    j,
                    coeffs: coeffs.map(|p| p.to_string()),
                })
                .collect(),
        };
        toml::to_string(&file).expect("algebra file serialization cannot fail")
    }
}

/// On-disk form of an algebra definition.
#[derive(Debug, Serialize, Deserialize)]
struct AlgebraFile {
    name: String,
    #[serde(default)]
    params: Vec<String>,
    #[serde(default)]
    constraints: Vec<String>,
    #[serde(default)]
    brackets: Vec<BracketEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct BracketEntry {
    i: usize,
    j: usize,
    coeffs: [String; 4],
}

/// Parses an algebra definition document, completes antisymmetry and
/// rejects the load unless the Jacobi identity holds identically.
pub fn load_algebra(source: &str) -> Result<LieAlgebraSpec> {
    let file: AlgebraFile =
        toml::from_str(source).map_err(|e| Error::BadAlgebraFile(e.to_string()))?;
    if file.name.trim().is_empty() {
        return Err(Error::BadAlgebraFile("missing algebra name".into()));
    }
    let params: Vec<&str> = file.params.iter().map(String::as_str).collect();
    let vars = VarSet::new(&params);
    let constraints = file
        .constraints
        .iter()
        .map(|s| Constraint::parse(&vars, s))
        .collect::<Result<Vec<_>>>()?;
    let mut brackets = Vec::new();
    for entry in &file.brackets {
        let coeffs: [Poly; 4] = [
            Poly::parse(&vars, &entry.coeffs[0])?,
            Poly::parse(&vars, &entry.coeffs[1])?,
            Poly::parse(&vars, &entry.coeffs[2])?,
            Poly::parse(&vars, &entry.coeffs[3])?,
        ];
        brackets.push((entry.i, entry.j, coeffs));
    }
    let spec = LieAlgebraSpec::new(&file.name, &vars, &brackets, constraints)?;
    if let Some(v) = spec.jacobi_violations().first() {
        return Err(Error::JacobiViolation(v.triple.0, v.triple.1, v.triple.2));
    }
    Ok(spec)
}

/// The built-in catalog of validated two-parameter algebras.
pub mod catalog {
    use super::*;

    pub const NAMES: [&str; 2] = ["g4_5", "g4_6"];

    /// Returns a catalog algebra by name.
    pub fn get(name: &str) -> Result<LieAlgebraSpec> {
        match name {
            "g4_5" => Ok(g4_5()),
            "g4_6" => Ok(g4_6()),
            other => Err(Error::UnknownAlgebra {
                name: other.to_string(),
                available: NAMES.join(", "),
            }),
        }
    }

    /// `[e1,e4] = e1, [e2,e4] = a e2, [e3,e4] = b e3` with `a != 0, b != 0`.
    pub fn g4_5() -> LieAlgebraSpec {
        let vars = VarSet::ab();
        let a = Poly::var(&vars, "a").unwrap();
        let b = Poly::var(&vars, "b").unwrap();
        let zero = || Poly::zero(&vars);
        LieAlgebraSpec::new(
            "g4_5",
            &vars,
            &[
                (1, 4, [Poly::one(&vars), zero(), zero(), zero()]),
                (2, 4, [zero(), a.clone(), zero(), zero()]),
                (3, 4, [zero(), zero(), b.clone(), zero()]),
            ],
            vec![Constraint::NonZero(a), Constraint::NonZero(b)],
        )
        .expect("catalog entry is well-formed")
    }

    /// `[e1,e4] = a e1, [e2,e4] = b e2 - e3, [e3,e4] = e2 + b e3` with
    /// `a != 0, b >= 0`.
    pub fn g4_6() -> LieAlgebraSpec {
        let vars = VarSet::ab();
        let a = Poly::var(&vars, "a").unwrap();
        let b = Poly::var(&vars, "b").unwrap();
        let zero = || Poly::zero(&vars);
        let one = || Poly::one(&vars);
        LieAlgebraSpec::new(
            "g4_6",
            &vars,
            &[
                (1, 4, [a.clone(), zero(), zero(), zero()]),
                (2, 4, [zero(), b.clone(), one().negated(), zero()]),
                (3, 4, [zero(), one(), b.clone(), zero()]),
            ],
            vec![
                Constraint::NonZero(a),
                Constraint::NonNegative("b".to_string()),
            ],
        )
        .expect("catalog entry is well-formed")
    }

    /// Abelian algebra over {a, b}; handy as the flat reference case.
    pub fn abelian() -> LieAlgebraSpec {
        LieAlgebraSpec::new("abelian", &VarSet::ab(), &[], Vec::new())
            .expect("catalog entry is well-formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat_int;

    fn poly(s: &str) -> Poly {
        Poly::parse(&VarSet::ab(), s).unwrap()
    }

    #[test]
    fn g45_bracket_e2_e4_is_a_e2() {
        let alg = catalog::g4_5();
        let vars = alg.vars().clone();
        let v = alg.bracket(&Vector::basis(&vars, 1), &Vector::basis(&vars, 3));
        assert_eq!(v.0[1], poly("a"));
        assert!(v.0[0].is_zero() && v.0[2].is_zero() && v.0[3].is_zero());
    }

    #[test]
    fn g46_bracket_e3_e4_is_e2_plus_b_e3() {
        let alg = catalog::g4_6();
        let vars = alg.vars().clone();
        let v = alg.bracket(&Vector::basis(&vars, 2), &Vector::basis(&vars, 3));
        assert_eq!(v.0[1], poly("1"));
        assert_eq!(v.0[2], poly("b"));
    }

    #[test]
    fn bracket_of_vector_with_itself_vanishes() {
        let alg = catalog::g4_5();
        let vars = alg.vars().clone();
        let x = Vector([poly("a + 1"), poly("2"), poly("b"), poly("a*b")]);
        assert!(alg.bracket(&x, &x).is_zero());
        let _ = vars;
    }

    #[test]
    fn catalog_algebras_satisfy_jacobi_symbolically() {
        assert!(catalog::g4_5().jacobi_violations().is_empty());
        assert!(catalog::g4_6().jacobi_violations().is_empty());
    }

    #[test]
    fn extra_bracket_breaks_jacobi_with_named_triple() {
        // g4_5 plus [e1,e2] = e3 violates Jacobi.
        let vars = VarSet::ab();
        let zero = || Poly::zero(&vars);
        let alg = LieAlgebraSpec::new(
            "broken",
            &vars,
            &[
                (1, 4, [Poly::one(&vars), zero(), zero(), zero()]),
                (2, 4, [zero(), poly("a"), zero(), zero()]),
                (3, 4, [zero(), zero(), poly("b"), zero()]),
                (1, 2, [zero(), zero(), Poly::one(&vars), zero()]),
            ],
            Vec::new(),
        )
        .unwrap();
        let violations = alg.jacobi_violations();
        assert!(!violations.is_empty());
        assert!(violations.iter().any(|v| v.triple == (1, 2, 4)));
    }

    #[test]
    fn unknown_catalog_name_lists_available() {
        let err = catalog::get("g9_99").unwrap_err();
        assert!(matches!(err, Error::UnknownAlgebra { .. }));
        assert!(err.to_string().contains("g4_5"));
    }

    #[test]
    fn toml_round_trip_is_identity() {
        for alg in [catalog::g4_5(), catalog::g4_6(), catalog::abelian()] {
            let text = alg.to_toml_string();
            let back = load_algebra(&text).unwrap();
            assert_eq!(back, alg);
        }
    }

    #[test]
    fn empty_bracket_table_loads_as_abelian() {
        let spec = load_algebra("name = \"flat\"\nparams = []\n").unwrap();
        assert!(spec.bracket_entries().is_empty());
        assert!(spec.jacobi_violations().is_empty());
    }

    #[test]
    fn jacobi_violating_file_is_rejected_naming_the_triple() {
        let text = r#"
name = "broken"
params = ["a", "b"]

[[brackets]]
i = 1
j = 4
coeffs = ["1", "0", "0", "0"]

[[brackets]]
i = 1
j = 2
coeffs = ["0", "0", "1", "0"]
"#;
        let err = load_algebra(text).unwrap_err();
        assert!(matches!(err, Error::JacobiViolation(1, 2, 4)));
    }

    #[test]
    fn duplicate_bracket_entry_is_an_antisymmetry_conflict() {
        let text = r#"
name = "dup"
params = []

[[brackets]]
i = 1
j = 2
coeffs = ["0", "0", "1", "0"]

[[brackets]]
i = 1
j = 2
coeffs = ["0", "0", "2", "0"]
"#;
        assert!(matches!(
            load_algebra(text),
            Err(Error::AntisymmetryConflict { i: 1, j: 2 })
        ));
    }

    #[test]
    fn constraint_checks_report_the_violated_constraint() {
        let alg = catalog::g4_5();
        let ok: BTreeMap<String, Rational> =
            [("a".into(), rat_int(1)), ("b".into(), rat_int(-3))].into();
        alg.check_constraints(&ok).unwrap();
        let bad: BTreeMap<String, Rational> =
            [("a".into(), rat_int(0)), ("b".into(), rat_int(1))].into();
        let err = alg.check_constraints(&bad).unwrap_err();
        assert!(matches!(err, Error::DomainViolation(c) if c == "a != 0"));

        let g46 = catalog::g4_6();
        let neg: BTreeMap<String, Rational> =
            [("a".into(), rat_int(1)), ("b".into(), rat_int(-1))].into();
        let err = g46.check_constraints(&neg).unwrap_err();
        assert!(matches!(err, Error::DomainViolation(c) if c == "b >= 0"));
    }
}
