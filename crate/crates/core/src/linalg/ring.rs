use std::cmp::Ordering;
use std::fmt::{self, Debug};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::int::Int;
use super::LinalgError;

/// Which coefficients a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coefficients {
    Integers,
    Rationals,
    Prime(u64),
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::Rationals => write!(f, "Q"),
            Coefficients::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// A Euclidean domain, passed around as a context object so that runtime
/// parameters (the characteristic of a prime field) live outside the elements.
pub trait Ring: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// Euclidean division: `a = q b + r` with `r = 0` or `size(r) < size(b)`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Compares the Euclidean size of two nonzero elements.
    fn size_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    /// A unit `u` such that `u a` is the canonical associate of `a`.
    fn canonical_unit(&self, a: &Self::Elem) -> Self::Elem;
    fn unit_inverse(&self, u: &Self::Elem) -> Self::Elem;
    /// Canonical representative of `a` modulo the nonzero non-unit `m`.
    fn reduce(&self, a: &Self::Elem, m: &Self::Elem) -> Self::Elem;
    /// Integer view of an invariant factor (only meaningful over the integers).
    fn to_int(&self, a: &Self::Elem) -> Option<Int>;
    fn coefficients(&self) -> Coefficients;

    fn divides(&self, d: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(d) {
            return self.is_zero(a);
        }
        self.is_zero(&self.div_rem(a, d).1)
    }

    fn sign(&self, negative: bool) -> Self::Elem {
        if negative {
            self.neg(&self.one())
        } else {
            self.one()
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = Int;

    fn zero(&self) -> Int {
        Int::ZERO
    }
    fn one(&self) -> Int {
        Int::ONE
    }
    fn from_i64(&self, v: i64) -> Int {
        Int::from(v)
    }
    fn is_zero(&self, a: &Int) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Int, b: &Int) -> Int {
        a + b
    }
    fn sub(&self, a: &Int, b: &Int) -> Int {
        a - b
    }
    fn mul(&self, a: &Int, b: &Int) -> Int {
        a * b
    }
    fn neg(&self, a: &Int) -> Int {
        -a
    }
    fn is_unit(&self, a: &Int) -> bool {
        matches!(a, Int::Small(1) | Int::Small(-1))
    }
    fn div_rem(&self, a: &Int, b: &Int) -> (Int, Int) {
        a.div_rem(b)
    }
    fn size_cmp(&self, a: &Int, b: &Int) -> Ordering {
        a.cmp_abs(b)
    }
    fn canonical_unit(&self, a: &Int) -> Int {
        if a.signum() < 0 {
            Int::from(-1)
        } else {
            Int::ONE
        }
    }
    fn unit_inverse(&self, u: &Int) -> Int {
        u.clone()
    }
    fn reduce(&self, a: &Int, m: &Int) -> Int {
        a.mod_floor(m)
    }
    fn to_int(&self, a: &Int) -> Option<Int> {
        Some(a.clone())
    }
    fn coefficients(&self) -> Coefficients {
        Coefficients::Integers
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        (a / b, BigRational::zero())
    }
    fn size_cmp(&self, a: &BigRational, b: &BigRational) -> Ordering {
        // all nonzero elements are units; prefer short entries to limit growth
        let ha = a.numer().bits() + a.denom().bits();
        let hb = b.numer().bits() + b.denom().bits();
        ha.cmp(&hb)
    }
    fn canonical_unit(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn unit_inverse(&self, u: &BigRational) -> BigRational {
        u.recip()
    }
    fn reduce(&self, _a: &BigRational, _m: &BigRational) -> BigRational {
        BigRational::zero()
    }
    fn to_int(&self, a: &BigRational) -> Option<Int> {
        if a.is_integer() {
            Some(Int::from_big(a.to_integer()))
        } else {
            None
        }
    }
    fn coefficients(&self) -> Coefficients {
        Coefficients::Rationals
    }
}

/// The prime field with `p` elements, `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField, LinalgError> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn lift(&self, v: &Int) -> u64 {
        v.mod_floor(&Int::from(self.p as i64))
            .to_i64()
            .expect("residue fits in i64") as u64
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat
        let mut base = a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (a * self.inv(*b) % self.p, 0)
    }
    fn size_cmp(&self, _a: &u64, _b: &u64) -> Ordering {
        Ordering::Equal
    }
    fn canonical_unit(&self, a: &u64) -> u64 {
        self.inv(*a)
    }
    fn unit_inverse(&self, u: &u64) -> u64 {
        self.inv(*u)
    }
    fn reduce(&self, _a: &u64, _m: &u64) -> u64 {
        0
    }
    fn to_int(&self, a: &u64) -> Option<Int> {
        Some(Int::from(*a as i64))
    }
    fn coefficients(&self) -> Coefficients {
        Coefficients::Prime(self.p)
    }
}

/// Rational number from an exact integer, used when mapping integral matrices to `Q`.
pub fn rational_from_int(v: &Int) -> BigRational {
    BigRational::from_integer(v.to_big())
}
