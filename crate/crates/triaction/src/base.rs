//! Exact arithmetic in the base ring `A`: rational functions in the
//! uniformizer `x` whose denominator does not vanish at `x = 0`, i.e. the
//! localization of `Q[x]` at the prime `(x)`. `A` is a discrete valuation
//! ring with residue field `Q`; [`BaseElem::x_order`] is the valuation and
//! [`BaseElem::residue`] the reduction map.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// Dense univariate polynomial over `Q`, used for the numerator and
/// denominator of [`BaseElem`]. Coefficients ascending, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval_at_zero(&self) -> Rational {
        self.coeff(0)
    }

    /// Index of the lowest nonzero coefficient; `None` for the zero polynomial.
    pub fn x_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; `other` must be nonzero.
    pub fn divrem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by zero polynomial");
        let dd = other.coeffs.len() - 1;
        let lead = other.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), UniPoly::new(rem));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            let q = c / &lead;
            quot[i - dd] = q.clone();
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = &q * b;
                rem[i - dd + j] -= t;
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.degree() {
            None => UniPoly::zero(),
            Some(d) => {
                let inv = Rational::one() / self.coeffs[d].clone();
                self.scale(&inv)
            }
        }
    }

    /// Drop a factor of `x^k`; caller must ensure `x_order >= k`.
    fn shift_down(&self, k: usize) -> Self {
        UniPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// An element of the discrete valuation ring `A = Q[x]_(x)`: a reduced
/// fraction `num/den` of polynomials in `x` with `den(0) != 0`.
///
/// Normal form: `gcd(num, den) = 1` and `den` monic, so equality is
/// structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseElem {
    num: UniPoly,
    den: UniPoly,
}

impl BaseElem {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Arithmetic("denominator is zero".into()));
        }
        if den.eval_at_zero().is_zero() {
            return Err(Error::Arithmetic(format!(
                "denominator {} vanishes at x = 0: not a unit of the local ring",
                den
            )));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return BaseElem { num, den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        // make the denominator monic
        let lead = den.coeffs[den.coeffs.len() - 1].clone();
        if lead.is_one() {
            BaseElem { num, den }
        } else {
            let inv = Rational::one() / lead;
            BaseElem { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        BaseElem { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> Self {
        BaseElem { num: UniPoly::one(), den: UniPoly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        BaseElem { num: UniPoly::constant(c), den: UniPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// `c * x^k`
    pub fn x_power(c: Rational, k: usize) -> Self {
        BaseElem { num: UniPoly::monomial(c, k), den: UniPoly::one() }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        BaseElem { num: p, den: UniPoly::one() }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the element lies in `Q[x]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&UniPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::reduce(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BaseElem { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BaseElem { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Exact division in `A`. Fails unless `x_order(self) >= x_order(other)`
    /// (equivalently, the reduced fraction has unit denominator).
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let num = self.num.mul(&other.den);
        let den = self.den.mul(&other.num);
        let q = Self::reduce(num, den);
        if q.den.eval_at_zero().is_zero() {
            return Err(Error::Divisibility(format!(
                "{} is not divisible by {} in the local ring",
                self, other
            )));
        }
        Ok(q)
    }

    /// The valuation: order of vanishing at `x = 0`. `None` encodes infinity
    /// (the zero element).
    pub fn x_order(&self) -> Option<usize> {
        // den(0) != 0, so the valuation is carried entirely by the numerator.
        self.num.x_order()
    }

    /// Image in the residue field `Q = A/(x)`.
    pub fn residue(&self) -> Rational {
        self.num.eval_at_zero() / self.den.eval_at_zero()
    }

    /// Drop an exact factor of `x^k`.
    pub fn div_x_exact(&self, k: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        match self.x_order() {
            Some(v) if v >= k => Ok(BaseElem { num: self.num.shift_down(k), den: self.den.clone() }),
            _ => Err(Error::Divisibility(format!("{} is not divisible by x^{}", self, k))),
        }
    }

    pub fn mul_x_power(&self, k: usize) -> Self {
        BaseElem { num: self.num.mul(&UniPoly::monomial(Rational::one(), k)), den: self.den.clone() }
    }

    /// Truncation of the power-series expansion below `x^k`, returned as a
    /// polynomial element.
    pub fn truncate(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return Self::zero();
        }
        // invert den as a power series up to x^k, layer by layer
        let d0 = self.den.eval_at_zero();
        let mut inv = vec![Rational::one() / d0.clone()];
        for m in 1..k {
            // coefficient m of den * inv must vanish
            let mut acc = Rational::zero();
            for j in 0..m {
                acc += self.den.coeff(m - j) * &inv[j];
            }
            inv.push(-acc / d0.clone());
        }
        let series = self.num.mul(&UniPoly::new(inv));
        let truncated = UniPoly::new(series.coeffs().iter().take(k).cloned().collect());
        BaseElem::from_poly(truncated)
    }
}

impl fmt::Display for BaseElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> UniPoly {
        UniPoly::monomial(Rational::one(), 1)
    }

    #[test]
    fn x_order_of_polynomial() {
        // x^2 + x^3 = x^2 (1 + x)
        let p = BaseElem::from_poly(UniPoly::new(vec![
            rat_int(0),
            rat_int(0),
            rat_int(1),
            rat_int(1),
        ]));
        assert_eq!(p.x_order(), Some(2));
        assert_eq!(BaseElem::zero().x_order(), None);
    }

    #[test]
    fn residue_of_fraction() {
        // (2 + 3x)/(1 + x) -> 2 at x = 0
        let e = BaseElem::new(
            UniPoly::new(vec![rat_int(2), rat_int(3)]),
            UniPoly::new(vec![rat_int(1), rat_int(1)]),
        )
        .unwrap();
        assert_eq!(e.residue(), rat_int(2));
    }

    #[test]
    fn exact_div_unit_factor() {
        // x^2 (1 + x) / x^2 = 1 + x
        let a = BaseElem::from_poly(UniPoly::monomial(rat_int(1), 2).mul(&UniPoly::new(vec![
            rat_int(1),
            rat_int(1),
        ])));
        let b = BaseElem::from_poly(UniPoly::monomial(rat_int(1), 2));
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, BaseElem::from_poly(UniPoly::new(vec![rat_int(1), rat_int(1)])));
    }

    #[test]
    fn exact_div_failures() {
        let a = BaseElem::from_poly(x());
        let b = BaseElem::from_poly(UniPoly::monomial(rat_int(1), 2));
        assert!(matches!(a.exact_div(&b), Err(Error::Divisibility(_))));
        assert!(matches!(a.exact_div(&BaseElem::zero()), Err(Error::Arithmetic(_))));
    }

    #[test]
    fn denominator_must_be_unit() {
        assert!(BaseElem::new(UniPoly::one(), x()).is_err());
    }

    #[test]
    fn valuation_is_additive_and_residue_multiplicative() {
        let samples = [
            BaseElem::from_poly(UniPoly::new(vec![rat_int(2), rat_int(3)])),
            BaseElem::from_poly(UniPoly::monomial(rat(1, 2), 1)),
            BaseElem::new(UniPoly::monomial(rat_int(5), 2), UniPoly::new(vec![rat_int(1), rat_int(-1)]))
                .unwrap(),
            BaseElem::from_int(7),
        ];
        for a in &samples {
            for b in &samples {
                let prod = a.mul(b);
                assert_eq!(
                    prod.x_order(),
                    Some(a.x_order().unwrap() + b.x_order().unwrap())
                );
                assert_eq!(prod.residue(), a.residue() * b.residue());
                assert_eq!(a.add(b).residue(), a.residue() + b.residue());
            }
        }
    }

    #[test]
    fn truncation() {
        // 1/(1+x) = 1 - x + x^2 - ...
        let e = BaseElem::new(UniPoly::one(), UniPoly::new(vec![rat_int(1), rat_int(1)])).unwrap();
        let t = e.truncate(3);
        assert_eq!(
            t.as_polynomial().unwrap(),
            &UniPoly::new(vec![rat_int(1), rat_int(-1), rat_int(1)])
        );
    }
}
