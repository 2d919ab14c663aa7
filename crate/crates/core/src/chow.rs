//! Chern-class calculus in the Chow ring `Z[h]/(h^{n+1})` of `P^n`.
//!
//! A divisor of degree `d` has class `d h`. For divisors `D_1, ..., D_k` the
//! total Chern class of the sheaf of logarithmic one-forms is
//! `(1 - h)^{n+1} / prod_j (1 - d_j h)`, and integration over `P^n` reads off
//! the coefficient of `h^n`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{fmt_rat, rat, to_integer, Rat};

/// Element of `Q[h]/(h^{n+1})`, stored as the coefficients of `h^0, ..., h^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChowClass {
    n: usize,
    coeffs: Vec<Rat>,
}

impl ChowClass {
    /// Coefficients beyond `h^n` are dropped, missing ones are zero.
    pub fn new(n: usize, coeffs: Vec<Rat>) -> Self {
        let mut c = coeffs;
        c.resize(n + 1, Rat::zero());
        ChowClass { n, coeffs: c }
    }

    pub fn from_i64(n: usize, coeffs: &[i64]) -> Self {
        ChowClass::new(n, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn one(n: usize) -> Self {
        ChowClass::from_i64(n, &[1])
    }

    /// `a + b h`
    pub fn linear(n: usize, a: i64, b: i64) -> Self {
        ChowClass::from_i64(n, &[a, b])
    }

    /// `h^k`
    pub fn hyperplane_power(n: usize, k: usize) -> Self {
        let mut c = vec![Rat::zero(); n + 1];
        if k <= n {
            c[k] = Rat::one();
        }
        ChowClass { n, coeffs: c }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `h^k` (zero above `n`).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficients as integers; fails if any is fractional.
    pub fn integer_coeffs(&self, what: &str) -> Result<Vec<BigInt>> {
        self.coeffs.iter().map(|c| to_integer(c, what)).collect()
    }

    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut c = vec![Rat::zero(); self.n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.n + 1 - i) {
                c[i + j] += a * b;
            }
        }
        Ok(ChowClass { n: self.n, coeffs: c })
    }

    pub fn pow(&self, e: u32) -> ChowClass {
        (0..e).fold(ChowClass::one(self.n), |acc, _| acc.mul(self).expect("same dimension"))
    }

    pub fn scale(&self, s: &Rat) -> ChowClass {
        ChowClass {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Truncated multiplicative inverse of a class with constant term one.
    pub fn inverse(&self) -> Result<ChowClass> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnit(fmt_rat(&self.coeffs[0])));
        }
        let mut inv = vec![Rat::zero(); self.n + 1];
        inv[0] = Rat::one();
        for k in 1..=self.n {
            let mut s = Rat::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -s;
        }
        Ok(ChowClass { n: self.n, coeffs: inv })
    }

    /// Degree: the coefficient of `h^n`.
    pub fn integrate(&self) -> Rat {
        self.coeffs[self.n].clone()
    }

    /// `sum_k (-1)^k c_k h^k`, the class of the dual bundle.
    pub fn dual(&self) -> ChowClass {
        ChowClass {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
                .collect(),
        }
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => fmt_rat(c),
                1 => format!("{}*h", fmt_rat(c)),
                _ => format!("{}*h^{}", fmt_rat(c), k),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn chow_mul(a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
    a.mul(b)
}

pub fn chow_inverse(a: &ChowClass) -> Result<ChowClass> {
    a.inverse()
}

pub fn integrate(a: &ChowClass) -> Rat {
    a.integrate()
}

/// `c(T P^n) = (1 + h)^{n+1}`
pub fn tangent_class(n: usize) -> ChowClass {
    ChowClass::linear(n, 1, 1).pow(n as u32 + 1)
}

/// `c(Omega^1_{P^n}) = (1 - h)^{n+1}`
pub fn cotangent_class(n: usize) -> ChowClass {
    ChowClass::linear(n, 1, -1).pow(n as u32 + 1)
}

fn check_degrees(degrees: &[u32]) -> Result<()> {
    if degrees.contains(&0) {
        return Err(Error::InvalidInput("divisor degrees must be positive".into()));
    }
    Ok(())
}

/// `(1 - h)^{n+1} prod_j (1 - d_j h)^{-1}` for any number of divisors,
/// the logarithmic Chern class of a normal crossings arrangement.
pub fn snc_log_chern_class(n: usize, degrees: &[u32]) -> Result<ChowClass> {
    check_degrees(degrees)?;
    let mut c = cotangent_class(n);
    for &d in degrees {
        c = c.mul(&ChowClass::linear(n, 1, -i64::from(d)).inverse()?)?;
    }
    Ok(c)
}

/// Total Chern class of logarithmic one-forms along a divisor given by one
/// or two pieces of the stated degrees.
pub fn log_chern_class(n: usize, degrees: &[u32]) -> Result<ChowClass> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("ambient dimension {n} < 2")));
    }
    if degrees.is_empty() || degrees.len() > 2 {
        return Err(Error::UnsupportedDivisorCount(degrees.len()));
    }
    snc_log_chern_class(n, degrees)
}

/// `c(TX - (+)_j [D_j]) = (1+h)^{n+1} prod (1 + d_j h)^{-1}` when `tangent`,
/// otherwise the dual class `(1-h)^{n+1} prod (1 - d_j h)^{-1}`.
pub fn chern_difference_class(n: usize, tangent: bool, degrees: &[u32]) -> Result<ChowClass> {
    check_degrees(degrees)?;
    let (base, sign) = if tangent {
        (tangent_class(n), 1)
    } else {
        (cotangent_class(n), -1)
    };
    let mut c = base;
    for &d in degrees {
        c = c.mul(&ChowClass::linear(n, 1, sign * i64::from(d)).inverse()?)?;
    }
    Ok(c)
}

/// `int_Z c_{n-k}(TX - (+)_j [D_j])` over the complete intersection `Z` of
/// `k` divisors of the given degrees: `prod d_j` times the coefficient of
/// `h^{n-k}`. Returns zero when `k > n`.
pub fn complete_intersection_integral(n: usize, degrees: &[u32]) -> Result<BigInt> {
    let k = degrees.len();
    if k > n {
        return Ok(BigInt::zero());
    }
    let c = chern_difference_class(n, true, degrees)?;
    let class = c.mul(&ChowClass::hyperplane_power(n, k))?;
    let prod: i64 = degrees.iter().map(|&d| i64::from(d)).product();
    to_integer(&(class.integrate() * rat(prod)), "complete intersection Chern integral")
}

/// `int_D c_{n-1}(TX - [D])` for a hypersurface of degree `d`.
pub fn divisor_chern_integral(n: usize, d: u32) -> Result<BigInt> {
    complete_intersection_integral(n, &[d])
}

/// `int_C c_{n-2}(TX - [D_1] (+) [D_2])` for `C = D_1 ∩ D_2`.
pub fn curve_chern_integral(n: usize, d1: u32, d2: u32) -> Result<BigInt> {
    complete_intersection_integral(n, &[d1, d2])
}

/// Complete homogeneous symmetric polynomial of degree `k`.
pub fn complete_symmetric(k: usize, args: &[Rat]) -> Rat {
    // table[j] = h_j of the arguments processed so far
    let mut table = vec![Rat::zero(); k + 1];
    table[0] = Rat::one();
    for a in args {
        for j in 1..=k {
            let add = a * &table[j - 1];
            table[j] += add;
        }
    }
    table[k].clone()
}

/// `c_n(T_{P^n} (x) O(-d)) = sum_{i=0}^n (1 - d)^i`, cross-checked against
/// `sum_i binom(n+1, i) (-d)^{n-i}`.
pub fn twisted_top_chern(n: usize, d: i64) -> Result<Rat> {
    let base = rat(1 - d);
    let geometric = (0..=n)
        .fold((Rat::zero(), Rat::one()), |(s, p), _| (s + &p, p * &base))
        .0;
    let mut binomial = Rat::zero();
    let mut choose = BigInt::one();
    for i in 0..=n {
        binomial += Rat::from_integer(choose.clone()) * num_traits::pow(rat(-d), n - i);
        choose = choose * BigInt::from(n + 1 - i) / BigInt::from(i + 1);
    }
    if geometric != binomial {
        return Err(Error::RouteDisagreement {
            quantity: format!("c_{n}(T(-{d}))"),
            left: fmt_rat(&geometric),
            right: fmt_rat(&binomial),
        });
    }
    Ok(geometric)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn top(n: usize, degrees: &[u32]) -> Rat {
        log_chern_class(n, degrees).unwrap().integrate()
    }

    #[test]
    fn multiplication_examples() {
        let h = ChowClass::hyperplane_power(3, 1);
        assert_eq!(
            h.mul(&ChowClass::hyperplane_power(3, 3)).unwrap(),
            ChowClass::new(3, vec![])
        );
        let p = ChowClass::linear(1, 1, 1).mul(&ChowClass::linear(1, 1, -1)).unwrap();
        assert_eq!(p, ChowClass::one(1));
        assert_eq!(ChowClass::linear(3, 1, 1).pow(4), ChowClass::from_i64(3, &[1, 4, 6, 4]));
        assert!(matches!(
            h.mul(&ChowClass::one(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        let inv = ChowClass::linear(3, 1, -2).inverse().unwrap();
        assert_eq!(inv, ChowClass::from_i64(3, &[1, 2, 4, 8]));
        assert_eq!(ChowClass::one(4).inverse().unwrap(), ChowClass::one(4));
        let t = tangent_class(5);
        assert_eq!(t.inverse().unwrap().mul(&t).unwrap(), ChowClass::one(5));
        assert!(matches!(ChowClass::linear(3, 2, 1).inverse(), Err(Error::NonUnit(_))));
    }

    #[test]
    fn log_chern_examples() {
        // (1-h)^3 (1 + 2h + 4h^2 + 8h^3): 8 - 12 + 6 - 1
        assert_eq!(top(3, &[1, 2]), rat(1));
        // (1-h)^4 / (1 - 3h): 27 - 36 + 18 - 4 = 5 = (-1)^3 (1 - 2 + 4 - 8)
        assert_eq!(top(3, &[3]), rat(5));
        assert_eq!(top(2, &[1, 1]), rat(0));
        assert!(matches!(
            log_chern_class(3, &[1, 1, 1]),
            Err(Error::UnsupportedDivisorCount(3))
        ));
        assert!(matches!(
            log_chern_class(3, &[]),
            Err(Error::UnsupportedDivisorCount(0))
        ));
        assert!(log_chern_class(1, &[1]).is_err());
        assert!(log_chern_class(3, &[0]).is_err());
    }

    #[test]
    fn difference_class_examples() {
        assert_eq!(chern_difference_class(3, true, &[1]).unwrap().coeff(2), rat(3));
        assert_eq!(chern_difference_class(3, true, &[2]).unwrap().coeff(2), rat(2));
        assert_eq!(chern_difference_class(3, true, &[1, 2]).unwrap().coeff(1), rat(1));
        assert_eq!(divisor_chern_integral(3, 1).unwrap(), BigInt::from(3));
        assert_eq!(divisor_chern_integral(3, 2).unwrap(), BigInt::from(4));
        assert_eq!(divisor_chern_integral(3, 3).unwrap(), BigInt::from(9));
        assert_eq!(curve_chern_integral(3, 1, 2).unwrap(), BigInt::from(2));
        assert_eq!(curve_chern_integral(3, 1, 3).unwrap(), BigInt::from(0));
        assert_eq!(curve_chern_integral(3, 1, 1).unwrap(), BigInt::from(2));
        // the dual variant is the dual class
        let t = chern_difference_class(4, true, &[2, 3]).unwrap();
        assert_eq!(chern_difference_class(4, false, &[2, 3]).unwrap(), t.dual());
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(tangent_class(3).integrate(), rat(4));
        assert_eq!(ChowClass::hyperplane_power(6, 6).integrate(), rat(1));
    }

    #[test]
    fn symmetric_function_examples() {
        assert_eq!(complete_symmetric(3, &[rat(1), rat(1)]), rat(4));
        assert_eq!(complete_symmetric(2, &[rat(2), rat(3)]), rat(19));
        assert_eq!(complete_symmetric(0, &[rat(7), rat(-2)]), rat(1));
        assert_eq!(complete_symmetric(2, &[]), rat(0));
    }

    #[test]
    fn twisted_top_examples() {
        assert_eq!(twisted_top_chern(1, 2).unwrap(), rat(0));
        assert_eq!(twisted_top_chern(3, 3).unwrap(), rat(-5));
        for n in 0..7 {
            assert_eq!(twisted_top_chern(n, 1).unwrap(), rat(1));
        }
    }
}
