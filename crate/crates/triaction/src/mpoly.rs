//! Sparse multivariate polynomials over an exact coefficient ring, with the
//! calculus operations (formal differentiation, integration from zero,
//! substitution) used throughout the reduction pipeline.
//!
//! Terms are stored in a `BTreeMap` keyed by graded-lexicographic monomial
//! order on the declared variable order, so every polynomial has one
//! canonical representation and printing is reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::base::{BaseElem, Rational};
use crate::error::{Error, Result};

/// Coefficient ring abstraction: implemented by `Rational` (the residue
/// field) and [`BaseElem`] (the valuation ring `A`).
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn exact_div(&self, other: &Self) -> Result<Self>;
    fn from_rational(r: &Rational) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Result<Self> {
        if Zero::is_zero(other) {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        Ok(self / other)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Coeff for BaseElem {
    fn zero() -> Self {
        BaseElem::zero()
    }
    fn one() -> Self {
        BaseElem::one()
    }
    fn is_zero(&self) -> bool {
        BaseElem::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        BaseElem::add(self, other)
    }
    fn neg(&self) -> Self {
        BaseElem::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        BaseElem::mul(self, other)
    }
    fn exact_div(&self, other: &Self) -> Result<Self> {
        BaseElem::exact_div(self, other)
    }
    fn from_rational(r: &Rational) -> Self {
        BaseElem::from_rational(r.clone())
    }
}

/// An ordered set of variable names. Cheap to clone; equality is by content.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        let v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in v.iter().enumerate() {
            assert!(
                !v[..i].contains(n),
                "duplicate variable name {n:?} in variable set"
            );
        }
        VarSet(Arc::new(v))
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

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index(name).is_some()
    }

    /// New set with `name` prepended.
    pub fn prepend(&self, name: &str) -> VarSet {
        let mut v = vec![name.to_string()];
        v.extend(self.0.iter().cloned());
        VarSet(Arc::new(v))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(", "))
    }
}

/// Exponent tuple, ordered graded-lexicographically (total degree first,
/// then earlier variables dominate).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn constant(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must check divisibility.
    pub fn div(&self, other: &Self) -> Self {
        Mono(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<C: Coeff> {
    vars: VarSet,
    terms: BTreeMap<Mono, C>,
}

pub type KPoly = MPoly<Rational>;
pub type APoly = MPoly<BaseElem>;

impl<C: Coeff> MPoly<C> {
    pub fn zero(vars: &VarSet) -> Self {
        MPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn constant(vars: &VarSet, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::constant(vars.len()), c);
        }
        MPoly { vars: vars.clone(), terms }
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        let i = vars
            .index(name)
            .ok_or_else(|| Error::Variable(format!("unknown variable {name:?} in {vars}")))?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Ok(Self::from_term(vars, Mono(e), C::one()))
    }

    pub fn from_term(vars: &VarSet, mono: Mono, c: C) -> Self {
        assert_eq!(mono.0.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        MPoly { vars: vars.clone(), terms }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map_or(false, |(m, c)| m.is_constant() && *c == C::one())
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_constant() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    fn insert_term(&mut self, mono: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "variable sets differ: {} vs {}",
            self.vars, other.vars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.scale(&C::from_rational(r))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Coefficient of `var^k`, with that variable's exponent zeroed out.
    pub fn coeff_of(&self, var: usize, k: u32) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut e = m.clone();
                e.0[var] = 0;
                out.insert_term(e, c.clone());
            }
        }
        out
    }

    /// All coefficients with respect to one variable, index = exponent.
    pub fn coeffs_wrt(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var).map_or(0, |d| d);
        (0..=d).map(|k| self.coeff_of(var, k)).collect()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.insert_term(m.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<MPoly<D>> {
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.insert_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn differentiate(&self, var: &str) -> Result<Self> {
        let i = self
            .vars
            .index(var)
            .ok_or_else(|| Error::Variable(format!("unknown variable {var:?} in {}", self.vars)))?;
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut me = m.clone();
            me.0[i] = e - 1;
            out.insert_term(me, c.mul(&C::from_rational(&Rational::from_integer(e.into()))));
        }
        Ok(out)
    }

    /// Formal integral with zero constant term:
    /// `integrate_from_zero(p, v)` has derivative `p` and no `v`-free part
    /// beyond what integration produces.
    pub fn integrate_from_zero(&self, var: &str) -> Result<Self> {
        let i = self
            .vars
            .index(var)
            .ok_or_else(|| Error::Variable(format!("unknown variable {var:?} in {}", self.vars)))?;
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut me = m.clone();
            me.0[i] = e + 1;
            let inv = Rational::one() / Rational::from_integer((e + 1).into());
            out.insert_term(me, c.mul(&C::from_rational(&inv)));
        }
        Ok(out)
    }

    /// Ring-homomorphic substitution. Every variable of `self` must either
    /// appear in `map` (image over `target`) or exist in `target` itself.
    pub fn substitute(
        &self,
        map: &BTreeMap<String, MPoly<C>>,
        target: &VarSet,
    ) -> Result<MPoly<C>> {
        // precompute images of every variable actually used
        let mut images: Vec<Option<MPoly<C>>> = vec![None; self.vars.len()];
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 && images[i].is_none() {
                    let name = &self.vars.names()[i];
                    let img = match map.get(name) {
                        Some(p) => {
                            if p.vars() != target {
                                return Err(Error::Variable(format!(
                                    "substitution image of {name:?} is over {} but target is {target}",
                                    p.vars()
                                )));
                            }
                            p.clone()
                        }
                        None => MPoly::var(target, name)?,
                    };
                    images[i] = Some(img);
                }
            }
        }
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut prod = MPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&images[i].as_ref().unwrap().pow(e));
                }
            }
            out = out.add(&prod);
        }
        Ok(out)
    }

    /// Embed into a larger variable set (identity on shared names).
    pub fn extend_vars(&self, target: &VarSet) -> Result<MPoly<C>> {
        let idx: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| {
                target
                    .index(n)
                    .ok_or_else(|| Error::Variable(format!("variable {n:?} missing from {target}")))
            })
            .collect::<Result<_>>()?;
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &exp) in m.0.iter().enumerate() {
                e[idx[i]] = exp;
            }
            out.insert_term(Mono(e), c.clone());
        }
        Ok(out)
    }

    /// Project onto a smaller variable set; fails if a dropped variable is used.
    pub fn restrict_vars(&self, target: &VarSet) -> Result<MPoly<C>> {
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &exp) in m.0.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let name = &self.vars.names()[i];
                match target.index(name) {
                    Some(j) => e[j] = exp,
                    None => {
                        return Err(Error::Variable(format!(
                            "polynomial uses {name:?} which is absent from {target}"
                        )))
                    }
                }
            }
            out.insert_term(Mono(e), c.clone());
        }
        Ok(out)
    }

    /// Division with remainder by `divisor`, both viewed as polynomials in
    /// `var`. The divisor's leading coefficient in `var` must be a nonzero
    /// constant (in particular this covers monic divisors).
    pub fn divrem_in_var(&self, divisor: &Self, var: usize) -> Result<(Self, Self)> {
        self.assert_same_vars(divisor);
        let dd = divisor
            .degree_in(var)
            .ok_or_else(|| Error::Arithmetic("division by zero polynomial".into()))?;
        let lead = divisor.coeff_of(var, dd);
        let lead_c = lead.as_constant().ok_or_else(|| {
            Error::Internal(format!(
                "divrem_in_var requires a constant leading coefficient, got {lead:?}"
            ))
        })?;
        if lead_c.is_zero() {
            return Err(Error::Arithmetic("division by zero polynomial".into()));
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        loop {
            let d = match rem.degree_in(var) {
                Some(d) if d >= dd => d,
                _ => break,
            };
            let top = rem.coeff_of(var, d);
            if top.is_zero() {
                break;
            }
            // q_term = (top / lead_c) * var^(d - dd)
            let mut q_term = top.try_map_coeffs(|c| c.exact_div(&lead_c))?;
            let mut shift = vec![0; self.vars.len()];
            shift[var] = d - dd;
            q_term = q_term.mul(&Self::from_term(&self.vars, Mono(shift), C::one()));
            rem = rem.sub(&q_term.mul(divisor));
            quot = quot.add(&q_term);
        }
        Ok((quot, rem))
    }

    /// Leading term under a monomial comparator.
    pub fn lead_term_by(
        &self,
        cmp: impl Fn(&Mono, &Mono) -> std::cmp::Ordering,
    ) -> Option<(&Mono, &C)> {
        self.terms.iter().max_by(|a, b| cmp(a.0, b.0))
    }

    /// Exact division by a single polynomial: returns the quotient or an
    /// error when `divisor` does not divide `self`.
    ///
    /// Uses lead-term elimination in graded-lex order; for a single divisor
    /// over a domain, failure of a lead-term step is conclusive.
    pub fn exact_div_poly(&self, divisor: &Self) -> Result<Self> {
        self.assert_same_vars(divisor);
        if divisor.is_zero() {
            return Err(Error::Arithmetic("division by zero polynomial".into()));
        }
        let (dm, dc) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while !rem.is_zero() {
            let (m, c) = rem.terms.iter().next_back().unwrap();
            if !dm.divides(m) {
                return Err(Error::Divisibility(format!(
                    "polynomial is not divisible (lead monomial obstruction)"
                )));
            }
            let qm = dm.div(m);
            let qc = c.exact_div(dc)?;
            let qterm = Self::from_term(&self.vars, qm, qc);
            rem = rem.sub(&qterm.mul(divisor));
            quot = quot.add(&qterm);
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div_poly(self).is_ok()
    }
}

impl MPoly<BaseElem> {
    /// Minimum valuation over all coefficients; `None` for zero.
    pub fn x_order(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.x_order()).min()
    }

    /// Reduce every coefficient modulo `x`.
    pub fn residue(&self) -> KPoly {
        let mut out = KPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.insert_term(m.clone(), c.residue());
        }
        out
    }

    pub fn div_x_exact(&self, k: usize) -> Result<Self> {
        self.try_map_coeffs(|c| c.div_x_exact(k))
    }

    pub fn mul_x_power(&self, k: usize) -> Self {
        self.map_coeffs(|c| c.mul_x_power(k))
    }

    /// Truncate every coefficient's power-series expansion below `x^k`.
    pub fn truncate_mod_xk(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            out.insert_term(m.clone(), c.truncate(k));
        }
        out
    }

    pub fn is_x_polynomial(&self) -> bool {
        self.terms.values().all(|c| c.is_polynomial())
    }

    /// Rewrite over `Q` by absorbing `x` as the first variable of a new
    /// variable set `[x, vars...]`. Fails when a coefficient has a
    /// non-constant denominator.
    pub fn to_x_kpoly(&self) -> Result<KPoly> {
        let target = self.vars.prepend("x");
        let mut out = KPoly::zero(&target);
        for (m, c) in &self.terms {
            let p = c.as_polynomial().ok_or_else(|| {
                Error::Internal(format!(
                    "coefficient {c} has a denominator; cannot expand in Q[x, ...]"
                ))
            })?;
            for (j, a) in p.coeffs().iter().enumerate() {
                if Zero::is_zero(a) {
                    continue;
                }
                let mut e = vec![j as u32];
                e.extend(m.0.iter().cloned());
                out.insert_term(Mono(e), a.clone());
            }
        }
        Ok(out)
    }

    pub fn from_rational_poly(p: &KPoly) -> APoly {
        p.map_coeffs(|c| BaseElem::from_rational(c.clone()))
    }

    /// Inverse of [`Self::to_x_kpoly`]: interpret the first variable of `p`
    /// (which must be named `x`) as the uniformizer.
    pub fn from_x_kpoly(p: &KPoly) -> Result<APoly> {
        if p.vars().names().first().map(String::as_str) != Some("x") {
            return Err(Error::Variable(format!(
                "expected leading variable x, got {}",
                p.vars()
            )));
        }
        let target = VarSet::new(&p.vars().names()[1..]);
        let mut out = APoly::zero(&target);
        for (m, c) in &p.terms {
            let xe = m.0[0] as usize;
            let rest = Mono(m.0[1..].to_vec());
            out.insert_term(rest, BaseElem::x_power(c.clone(), xe));
        }
        Ok(out)
    }
}

impl KPoly {
    pub fn to_apoly(&self) -> APoly {
        APoly::from_rational_poly(self)
    }

    /// Leading coefficient as a univariate polynomial in `var` (the other
    /// variables may still appear in it).
    pub fn lead_coeff_in(&self, var: usize) -> Option<KPoly> {
        self.degree_in(var).map(|d| self.coeff_of(var, d))
    }

    /// Make a univariate polynomial monic in `var`; the leading coefficient
    /// must be constant.
    pub fn monic_in(&self, var: usize) -> Result<KPoly> {
        let d = self
            .degree_in(var)
            .ok_or_else(|| Error::Arithmetic("zero polynomial has no monic form".into()))?;
        let lc = self
            .coeff_of(var, d)
            .as_constant()
            .ok_or_else(|| Error::Internal("leading coefficient is not constant".into()))?;
        Ok(self.scale(&(Rational::one() / lc)))
    }
}

impl fmt::Display for KPoly {
    /// Canonical form: terms in descending graded-lex order, `*` between
    /// factors, rational coefficients as `a/b`. Round-trips through the
    /// parser exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_constant() {
                factors.push(format!("{}", mag));
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = &self.vars.names()[i];
                if e == 1 {
                    factors.push(name.clone());
                } else {
                    factors.push(format!("{}^{}", name, e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::rat_int;

    fn yz() -> VarSet {
        VarSet::new(&["y", "z"])
    }

    fn kp(s: &str, vars: &VarSet) -> KPoly {
        crate::parse::parse_kpoly(s, vars).unwrap()
    }

    #[test]
    fn integrate_then_differentiate_is_identity() {
        let v = yz();
        for src in ["2*y", "y^2*z - 3*z + 1/2", "y^3 - y*z^2"] {
            let p = kp(src, &v);
            let int = p.integrate_from_zero("y").unwrap();
            assert_eq!(int.differentiate("y").unwrap(), p);
        }
    }

    #[test]
    fn integral_of_linear_term() {
        let v = yz();
        let p = kp("2*y", &v);
        assert_eq!(p.integrate_from_zero("y").unwrap(), kp("y^2", &v));
        assert_eq!(kp("y^2", &v).differentiate("y").unwrap(), p);
    }

    #[test]
    fn substitution_is_ring_homomorphic() {
        let v = yz();
        let a = kp("y + z", &v);
        let b = kp("y*z - 1", &v);
        let mut map = BTreeMap::new();
        map.insert("z".to_string(), kp("y^2 + 1", &v));
        let sub = |p: &KPoly| p.substitute(&map, &v).unwrap();
        assert_eq!(sub(&a.mul(&b)), sub(&a).mul(&sub(&b)));
        assert_eq!(sub(&a.add(&b)), sub(&a).add(&sub(&b)));
    }

    #[test]
    fn substitution_composes() {
        let v = yz();
        let p = kp("y^2*z + z^2", &v);
        let mut m1 = BTreeMap::new();
        m1.insert("y".to_string(), kp("y + z", &v));
        let mut m2 = BTreeMap::new();
        m2.insert("z".to_string(), kp("y*z", &v));
        let lhs = p.substitute(&m1, &v).unwrap().substitute(&m2, &v).unwrap();
        // m2 ∘ m1: y -> (y + z) with z replaced, z -> y*z
        let mut comp = BTreeMap::new();
        comp.insert(
            "y".to_string(),
            kp("y + z", &v).substitute(&m2, &v).unwrap(),
        );
        comp.insert("z".to_string(), kp("y*z", &v));
        let rhs = p.substitute(&comp, &v).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unknown_variable_errors() {
        let v = yz();
        let p = kp("y", &v);
        assert!(matches!(p.differentiate("w"), Err(Error::Variable(_))));
        assert!(matches!(p.integrate_from_zero("w"), Err(Error::Variable(_))));
    }

    #[test]
    fn exact_division() {
        let v = yz();
        let a = kp("y^2 - z^2", &v);
        let b = kp("y - z", &v);
        assert_eq!(a.exact_div_poly(&b).unwrap(), kp("y + z", &v));
        assert!(kp("y^2 + z", &v).exact_div_poly(&b).is_err());
    }

    #[test]
    fn divrem_by_monic() {
        let v = VarSet::new(&["t", "s"]);
        let m = kp("s^2 - t", &v);
        let p = kp("s^3 + s*t + 1", &v);
        let si = v.index("s").unwrap();
        let (q, r) = p.divrem_in_var(&m, si).unwrap();
        assert_eq!(q.mul(&m).add(&r), p);
        assert!(r.degree_in(si).map_or(true, |d| d < 2));
        // s^3 = s * (s^2 - t) + s*t, so remainder collects 2*s*t + 1
        assert_eq!(r, kp("2*s*t + 1", &v));
    }

    #[test]
    fn x_expansion_round_trip() {
        let v = yz();
        let p = APoly::from_rational_poly(&kp("2*y - z^2", &v))
            .add(&APoly::from_term(&v, Mono(vec![1, 0]), BaseElem::x_power(rat_int(3), 2)));
        let k = p.to_x_kpoly().unwrap();
        assert_eq!(APoly::from_x_kpoly(&k).unwrap(), p);
    }
}
