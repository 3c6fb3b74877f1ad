//! Multivariate polynomials over exact rationals in named parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use crate::Error;

/// Ordered set of parameter names shared by all polynomials of a session.
#[derive(Clone, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    /// Builds a variable set from distinct identifier-like names.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(
                !n.is_empty()
                    && n.chars().next().unwrap().is_ascii_alphabetic()
                    && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'),
                "invalid variable name `{n}`"
            );
            assert!(!names[..i].contains(n), "duplicate variable name `{n}`");
        }
        VarSet(Arc::new(names))
    }

    /// The standard two-parameter set {a, b} used by the built-in catalog.
    pub fn ab() -> Self {
        VarSet::new(&["a", "b"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for VarSet {}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(", "))
    }
}

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then the exponent of the first-listed variable, and so on). The largest
/// monomial is the canonical leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| x + y)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}
impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial in canonical form: no zero coefficients are
/// stored and the zero polynomial has an empty term map, so structural
/// equality coincides with ring equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(vars: &VarSet) -> Self {
        Poly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Poly::constant(vars, Rational::one())
    }

    pub fn constant(vars: &VarSet, value: Rational) -> Self {
        let mut p = Poly::zero(vars);
        if !value.is_zero() {
            p.terms.insert(Monomial(vec![0; vars.len()]), value);
        }
        p
    }

    pub fn int(vars: &VarSet, value: i64) -> Self {
        Poly::constant(vars, super::rat_int(value))
    }

    /// The polynomial consisting of the single named variable.
    pub fn var(vars: &VarSet, name: &str) -> Result<Self, Error> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0u32; vars.len()];
        exps[idx] = 1;
        let mut p = Poly::zero(vars);
        p.terms.insert(Monomial(exps), Rational::one());
        Ok(p)
    }

    pub fn monomial(vars: &VarSet, exps: &[u32], coeff: Rational) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Poly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exps.to_vec()), coeff);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.index_of(var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    fn check_vars(&self, other: &Poly) -> Result<(), Error> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableSetMismatch {
                left: self.vars.to_string(),
                right: other.vars.to_string(),
            })
        }
    }

    fn insert_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, Error> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Poly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, Error> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_term(&mut terms, m.clone(), -c.clone());
        }
        Ok(Poly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, Error> {
        self.check_vars(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::insert_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(Poly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn negated(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one(&self.vars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation. Every variable occurring in the polynomial must be
    /// assigned; unused assignments are ignored.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, Error> {
        let values: Vec<Option<&Rational>> = self
            .vars
            .names()
            .iter()
            .map(|n| assignment.get(n))
            .collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values[i].ok_or_else(|| {
                    Error::MissingAssignment(self.vars.names()[i].clone())
                })?;
                for _ in 0..e {
                    term *= v;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Replaces `var` by the polynomial `replacement` (over the same set).
    pub fn substitute(&self, var: &str, replacement: &Poly) -> Result<Poly, Error> {
        self.check_vars(replacement)?;
        let idx = self
            .vars
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut acc = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut rest = m.0.clone();
            let e = rest[idx];
            rest[idx] = 0;
            let base = Poly::monomial(&self.vars, &rest, c.clone());
            acc = &acc + &(&base * &replacement.pow(e));
        }
        Ok(acc)
    }

    /// Leading coefficient in the canonical (descending) term order.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    /// Scales to integer, coprime coefficients with positive leading
    /// coefficient. Used to present vanishing conditions canonically.
    pub fn normalized(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
            numer_gcd = numer_gcd.gcd(c.numer());
        }
        let mut factor = Rational::new(denom_lcm, numer_gcd);
        if self.leading_coefficient().unwrap().is_negative() == factor.is_positive() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// True when the two polynomials differ by a nonzero rational factor.
    pub fn proportional_to(&self, other: &Poly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.normalized() == other.normalized()
    }

    /// For a polynomial of total degree <= 1, the coefficient vector and
    /// the constant term.
    pub fn linear_parts(&self) -> Option<(Vec<Rational>, Rational)> {
        if self.total_degree() > 1 {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); self.vars.len()];
        let mut constant = Rational::zero();
        for (m, c) in &self.terms {
            if m.is_constant() {
                constant = c.clone();
            } else {
                let i = m.0.iter().position(|&e| e == 1).unwrap();
                coeffs[i] = c.clone();
            }
        }
        Some((coeffs, constant))
    }

    /// Parses the canonical syntax (`2*a^2 + a*b - 1`), plus parentheses
    /// and unary minus for convenience.
    pub fn parse(vars: &VarSet, input: &str) -> Result<Poly, Error> {
        Parser::new(vars, input)?.parse()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("variable sets differ")
    }
}
impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("variable sets differ")
    }
}
impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("variable sets differ")
    }
}
impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.negated()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_constant() {
                factors.push(format_rational(&abs));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.names()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars.names()[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    vars: &'a VarSet,
    tokens: Vec<Token>,
    pos: usize,
    input: &'a str,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl<'a> Parser<'a> {
    fn new(vars: &'a VarSet, input: &'a str) -> Result<Self, Error> {
        let mut tokens = Vec::new();
        let bytes: Vec<char> = input.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            match c {
                ' ' | '\t' | '\n' | '\r' => i += 1,
                '+' => {
                    tokens.push(Token::Plus);
                    i += 1;
                }
                '-' => {
                    tokens.push(Token::Minus);
                    i += 1;
                }
                '*' => {
                    tokens.push(Token::Star);
                    i += 1;
                }
                '^' => {
                    tokens.push(Token::Caret);
                    i += 1;
                }
                '(' => {
                    tokens.push(Token::LParen);
                    i += 1;
                }
                ')' => {
                    tokens.push(Token::RParen);
                    i += 1;
                }
                _ if c.is_ascii_digit() => {
                    let start = i;
                    while i < bytes.len()
                        && (bytes[i].is_ascii_digit() || bytes[i] == '.' || bytes[i] == '/')
                    {
                        // A '/' only belongs to the literal when followed by a digit.
                        if bytes[i] == '/' && !(i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit())
                        {
                            break;
                        }
                        i += 1;
                    }
                    let lit: String = bytes[start..i].iter().collect();
                    let value = parse_rational(&lit).map_err(|e| Error::BadPolynomial {
                        input: input.to_string(),
                        reason: e.to_string(),
                    })?;
                    tokens.push(Token::Number(value));
                }
                _ if c.is_ascii_alphabetic() => {
                    let start = i;
                    while i < bytes.len()
                        && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_')
                    {
                        i += 1;
                    }
                    tokens.push(Token::Ident(bytes[start..i].iter().collect()));
                }
                _ => {
                    return Err(Error::BadPolynomial {
                        input: input.to_string(),
                        reason: format!("unexpected character `{c}`"),
                    })
                }
            }
        }
        Ok(Parser {
            vars,
            tokens,
            pos: 0,
            input,
        })
    }

    fn fail(&self, reason: &str) -> Error {
        Error::BadPolynomial {
            input: self.input.to_string(),
            reason: reason.to_string(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse(&mut self) -> Result<Poly, Error> {
        let p = self.expr()?;
        if self.pos != self.tokens.len() {
            return Err(self.fail("trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Poly, Error> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, Error> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, Error> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(self.factor()?.negated())
            }
            _ => {
                let base = self.atom()?;
                if let Some(Token::Caret) = self.peek() {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Number(n)) => {
                            if !n.is_integer() || n.is_negative() {
                                return Err(self.fail("exponent must be a nonnegative integer"));
                            }
                            let e: u32 = n
                                .to_integer()
                                .try_into()
                                .map_err(|_| self.fail("exponent too large"))?;
                            return Ok(base.pow(e));
                        }
                        _ => return Err(self.fail("expected exponent after `^`")),
                    }
                }
                Ok(base)
            }
        }
    }

    fn atom(&mut self) -> Result<Poly, Error> {
        match self.next() {
            Some(Token::Number(n)) => Ok(Poly::constant(self.vars, n)),
            Some(Token::Ident(name)) => Poly::var(self.vars, &name),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(self.fail("unbalanced parenthesis")),
                }
            }
            _ => Err(self.fail("expected a number, variable or parenthesis")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_int};

    fn ab() -> VarSet {
        VarSet::ab()
    }

    fn p(s: &str) -> Poly {
        Poly::parse(&ab(), s).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((&p("a + 1") + &p("-a - 1")).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("a + b") * &p("a - b"), p("a^2 - b^2"));
    }

    #[test]
    fn doubling_yields_the_g45_scalar_curvature() {
        let tau = p("a^2 + b^2 + a*b + a + b + 1").scale(&rat_int(2));
        assert_eq!(tau, p("2*a^2 + 2*a*b + 2*b^2 + 2*a + 2*b + 2"));
        assert_eq!(
            tau.to_string(),
            "2*a^2 + 2*a*b + 2*b^2 + 2*a + 2*b + 2"
        );
    }

    #[test]
    fn canonical_display_order_and_signs() {
        assert_eq!(p("b^2 - a^2 + 1 - a*b").to_string(), "-a^2 - a*b + b^2 + 1");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-a").to_string(), "-a");
        assert_eq!(p("1/2*a - 1/2").to_string(), "1/2*a - 1/2");
    }

    #[test]
    fn parse_display_round_trip() {
        for s in [
            "2*a^2 + a*b - 1",
            "a",
            "-2*b^3 + 1/3",
            "a^2*b^2 - a*b + 7",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn eval_roots_and_values() {
        let zero = p("a + 1")
            .eval(&[("a".into(), rat_int(-1)), ("b".into(), rat_int(1))].into())
            .unwrap();
        assert!(zero.is_zero());

        let tau = p("2*a^2 + 2*a*b + 2*b^2 + 2*a + 2*b + 2");
        let v = tau
            .eval(&[("a".into(), rat_int(1)), ("b".into(), rat_int(1))].into())
            .unwrap();
        assert_eq!(v, rat_int(12));

        // The zero polynomial evaluates under any assignment, even empty.
        assert!(Poly::zero(&ab()).eval(&BTreeMap::new()).unwrap().is_zero());
    }

    #[test]
    fn eval_requires_occurring_variables_only() {
        let q = p("a + 1");
        assert!(q.eval(&[("a".into(), rat_int(2))].into()).is_ok());
        let err = q.eval(&[("b".into(), rat_int(2))].into()).unwrap_err();
        assert!(matches!(err, Error::MissingAssignment(v) if v == "a"));
    }

    #[test]
    fn mismatched_variable_sets_error() {
        let other = VarSet::new(&["t"]);
        let q = Poly::var(&other, "t").unwrap();
        assert!(p("a").checked_add(&q).is_err());
        assert!(p("a").checked_mul(&q).is_err());
    }

    #[test]
    fn substitution_is_composition() {
        // (a^2 + b) with a -> b + 1 gives b^2 + 3b + 1.
        let r = p("a^2 + b").substitute("a", &p("b + 1")).unwrap();
        assert_eq!(r, p("b^2 + 3*b + 1"));
    }

    #[test]
    fn normalization_makes_conditions_canonical() {
        assert_eq!(p("-2*a - 2").normalized(), p("a + 1"));
        assert_eq!(p("1/2*b - 1/2").normalized(), p("b - 1"));
        assert!(p("3*a - 3*b").proportional_to(&p("-a + b")));
        assert!(!p("a").proportional_to(&p("b")));
    }

    #[test]
    fn linear_parts_extraction() {
        let (coeffs, c) = p("2*a + b - 1").linear_parts().unwrap();
        assert_eq!(coeffs, vec![rat_int(2), rat_int(1)]);
        assert_eq!(c, rat_int(-1));
        assert!(p("a*b").linear_parts().is_none());
        assert_eq!(rat(1, 2), rat(2, 4));
    }
}
