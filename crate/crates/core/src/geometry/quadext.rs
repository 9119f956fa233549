//! Exact numbers `a + b·√m` over the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::GeometryError;

/// `a + b·√m` with `m` squarefree and not 1. Values with `b = 0` are
/// rational and carry `m = 1`, so they mix freely with any field.
///
/// Arithmetic between two irrational values with different `m` panics;
/// algorithms obtain every square root through [`Field::sqrt`], which
/// refuses to leave a single quadratic extension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    m: i64,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, m: i64) -> Self {
        assert!(m != 1 || b.is_zero(), "sqrt(1) is rational");
        assert!(m != 0 || b.is_zero(), "sqrt(0) is zero");
        QuadExt { a, b, m }.normalized()
    }

    pub fn rational(a: BigRational) -> Self {
        QuadExt {
            a,
            b: BigRational::zero(),
            m: 1,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::rational(BigRational::new(n.into(), d.into()))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// `√m` itself, for `m` squarefree.
    pub fn sqrt_of(m: i64) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), m)
    }

    fn normalized(mut self) -> Self {
        if self.b.is_zero() {
            self.m = 1;
        }
        self
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    /// The radicand, or 1 for rational values.
    pub fn radicand(&self) -> i64 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            m: self.m,
        }
    }

    /// `a² − m b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.m.into())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(QuadExt {
            a: c.a / &n,
            b: c.b / &n,
            m: c.m,
        })
    }

    fn common_m(&self, other: &Self) -> i64 {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.m,
            (_, true) => self.m,
            _ => {
                assert_eq!(self.m, other.m, "mixed sqrt({}) and sqrt({})", self.m, other.m);
                self.m
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Ord for QuadExt {
    /// A total order for canonical sorting: by rational part, then by the
    /// coefficient of the square root. Not the order of complex values.
    fn cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        let m = self.common_m(rhs);
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            m,
        }
        .normalized()
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let m = self.common_m(rhs);
        let mm = BigRational::from_integer(m.into());
        QuadExt {
            a: &self.a * &rhs.a + &self.b * &rhs.b * mm,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            m,
        }
        .normalized()
    }
}

impl<'a> Div<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &QuadExt) -> QuadExt {
        self * &rhs.inverse().expect("division by zero")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            m: self.m,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $f(self, rhs: QuadExt) -> QuadExt {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let root = format!("sqrt({})", self.m);
        let coeff = if self.b.is_one() {
            root
        } else if (-self.b.clone()).is_one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", fmt_rational(&self.b))
        };
        if self.a.is_zero() {
            write!(f, "{coeff}")
        } else if coeff.starts_with('-') {
            write!(f, "{}{coeff}", fmt_rational(&self.a))
        } else {
            write!(f, "{}+{coeff}", fmt_rational(&self.a))
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Splits a nonzero rational `r` as `s · q²` with `s` a squarefree integer.
/// Trial division; radicands beyond 10^12 are refused.
pub fn squarefree_decomposition(r: &BigRational) -> Result<(i64, BigRational), GeometryError> {
    assert!(!r.is_zero());
    // r = n/d = n·d / d²
    let nd: BigInt = r.numer() * r.denom();
    let limit = BigInt::from(10u8).pow(12);
    if nd.abs() > limit {
        return Err(GeometryError::OutOfScope(format!(
            "radicand {r} too large to factor"
        )));
    }
    let mut rest = nd.abs();
    let mut core = BigInt::one();
    let mut square = BigInt::one();
    let mut p = BigInt::from(2u8);
    while &p * &p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            core *= &p;
        }
        square *= p.pow(e / 2);
        p += 1u8;
    }
    core *= rest;
    if nd.is_negative() {
        core = -core;
    }
    let core_i = core
        .to_i64()
        .ok_or_else(|| GeometryError::OutOfScope(format!("radicand {r} too large")))?;
    let q = BigRational::new(square, r.denom().clone());
    Ok((core_i, q))
}

/// Exact square root of a non-negative rational, if it is a square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// The working field `Q` or `Q(√m)` of a computation. It starts rational and
/// adjoins at most one square root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    m: i64,
}

impl Default for Field {
    fn default() -> Self {
        Self::rational()
    }
}

impl Field {
    pub fn rational() -> Self {
        Field { m: 1 }
    }

    /// 1 when the field is `Q`.
    pub fn radicand(&self) -> i64 {
        self.m
    }

    /// A square root of `x` inside the current field, adjoining `√m` if
    /// the field is still `Q`. Fails if a second extension would be needed.
    pub fn sqrt(&mut self, x: &QuadExt) -> Result<QuadExt, GeometryError> {
        if x.is_zero() {
            return Ok(QuadExt::zero());
        }
        if let Some(r) = x.as_rational() {
            if let Some(s) = rational_sqrt(r) {
                return Ok(QuadExt::rational(s));
            }
            let (core, q) = squarefree_decomposition(r)?;
            if self.m == 1 {
                self.m = core;
            }
            if self.m == core {
                return Ok(QuadExt::new(BigRational::zero(), q, core));
            }
            // a rational non-square has a root in Q(√m) only when its squarefree part is m
            return Err(GeometryError::SecondExtension {
                field: self.m,
                radicand: core,
            });
        }
        if x.radicand() != self.m && self.m != 1 {
            return Err(GeometryError::SecondExtension {
                field: self.m,
                radicand: x.radicand(),
            });
        }
        self.m = x.radicand();
        // (p + q√m)² = a + b√m  <=>  p² + m q² = a, 2pq = b
        let n = rational_sqrt(&x.norm()).ok_or_else(|| GeometryError::OutOfScope(format!(
            "sqrt({x}) needs a degree-4 extension"
        )))?;
        let two = BigRational::from_integer(2.into());
        for cand in [(x.a.clone() + &n) / &two, (x.a.clone() - &n) / &two] {
            if let Some(p) = rational_sqrt(&cand) {
                if p.is_zero() {
                    continue;
                }
                let q = &x.b / (&two * &p);
                let root = QuadExt::new(p, q, self.m);
                if &root * &root == *x {
                    return Ok(root);
                }
            }
        }
        Err(GeometryError::OutOfScope(format!(
            "sqrt({x}) needs a degree-4 extension"
        )))
    }
}
