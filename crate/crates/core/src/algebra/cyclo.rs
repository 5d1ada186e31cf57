//! Elements of cyclotomic fields `Q(ζ_N)`, stored as polynomials in `ζ_N` reduced modulo `Φ_N`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::Rat;
use crate::error::{MathError, Result};

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_poly(d);
            num = int_poly_div_exact(&num, &div);
        }
    }
    let p = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn int_poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![0i64; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = r[i + db];
        q[i] = c;
        if c != 0 {
            for j in 0..=db {
                r[i + j] -= c * b[j];
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// An element of `Q(ζ_N)`. Rational elements are always stored at order 1.
#[derive(Clone)]
pub struct CycNumber {
    order: u32,
    coeffs: Vec<Rat>,
}

fn trim(v: &mut Vec<Rat>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn reduce_mod(mut p: Vec<Rat>, n: u32) -> Vec<Rat> {
    let phi = cyclotomic_poly(n);
    let d = phi.len() - 1;
    if p.len() > d {
        for i in (d..p.len()).rev() {
            let c = std::mem::take(&mut p[i]);
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                if phi[j] != 0 {
                    let t = &c * &Rat::int(phi[j]);
                    p[i - d + j] -= &t;
                }
            }
        }
        p.truncate(d);
    }
    trim(&mut p);
    p
}

impl CycNumber {
    fn make(order: u32, mut coeffs: Vec<Rat>) -> CycNumber {
        trim(&mut coeffs);
        if coeffs.len() <= 1 {
            CycNumber { order: 1, coeffs }
        } else {
            CycNumber { order, coeffs }
        }
    }

    pub fn zero() -> CycNumber {
        CycNumber { order: 1, coeffs: vec![] }
    }

    pub fn one() -> CycNumber {
        CycNumber::rational(Rat::one())
    }

    pub fn rational(r: Rat) -> CycNumber {
        CycNumber::make(1, vec![r])
    }

    pub fn int(n: i64) -> CycNumber {
        CycNumber::rational(Rat::int(n))
    }

    /// `ζ_N^a` with `ζ_N = e^{2πi/N}`.
    pub fn zeta(n: u32, a: i64) -> CycNumber {
        let k = a.rem_euclid(n as i64) as usize;
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = Rat::one();
        CycNumber::make(n, reduce_mod(v, n))
    }

    /// `e^{2πi r}` for rational `r`.
    pub fn root_of_unity(r: &Rat) -> CycNumber {
        let f = r.fract();
        let d = f.denom_u64().expect("denominator too large") as u32;
        let a = f.numer();
        let a: i64 = num_traits::ToPrimitive::to_i64(&a).unwrap();
        CycNumber::zeta(d, a)
    }

    /// The imaginary unit.
    pub fn i() -> CycNumber {
        CycNumber::zeta(4, 1)
    }

    /// Builds `Σ c_k ζ_N^k` from arbitrary-length coefficients.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rat>) -> CycNumber {
        CycNumber::make(order, reduce_mod(coeffs, order))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn to_rational(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn expect_rational(&self) -> Result<Rat> {
        self.to_rational().ok_or_else(|| MathError::NotRational(self.to_string()))
    }

    /// Re-expresses `self` in `Q(ζ_l)`; `l` must be a multiple of the current order.
    fn lifted(&self, l: u32) -> Vec<Rat> {
        if self.order == l || self.coeffs.len() <= 1 {
            return self.coeffs.clone();
        }
        assert!(l.is_multiple_of(self.order));
        let step = (l / self.order) as usize;
        let mut v = vec![Rat::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * step] = c.clone();
        }
        reduce_mod(v, l)
    }

    fn common(&self, other: &CycNumber) -> u32 {
        self.order.lcm(&other.order)
    }

    pub fn scale(&self, r: &Rat) -> CycNumber {
        if r.is_zero() {
            return CycNumber::zero();
        }
        CycNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn inv(&self) -> Result<CycNumber> {
        if self.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(CycNumber::rational(self.coeffs[0].recip()?));
        }
        let n = self.order;
        let phi: Vec<Rat> = cyclotomic_poly(n).iter().map(|&c| Rat::int(c)).collect();
        let (g, s) = poly_ext_gcd(self.coeffs.clone(), phi);
        debug_assert_eq!(g.len(), 1);
        let g0 = g[0].recip()?;
        Ok(CycNumber::make(n, reduce_mod(s.iter().map(|c| c * &g0).collect(), n)))
    }

    pub fn pow(&self, e: i64) -> Result<CycNumber> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut base = self.clone();
        let mut acc = CycNumber::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycNumber {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.order as usize;
        let mut v = vec![Rat::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[(n - k) % n] += c;
        }
        CycNumber::make(self.order, reduce_mod(v, self.order))
    }

    /// Floating-point value `(re, im)` for diagnostics.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let a = 2.0 * std::f64::consts::PI * k as f64 / n;
            (re + c.to_f64() * a.cos(), im + c.to_f64() * a.sin())
        })
    }
}

/// Returns `(g, s)` with `s·a ≡ g (mod b)`, `g = gcd(a, b)`.
fn poly_ext_gcd(a: Vec<Rat>, b: Vec<Rat>) -> (Vec<Rat>, Vec<Rat>) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (vec![Rat::one()], Vec::<Rat>::new());
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rat> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let db = b.len() - 1;
    let lead = b[db].recip().expect("zero divisor");
    let mut q = vec![Rat::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for j in 0..=db {
            let t = &c * &b[j];
            r[i + j] -= &t;
        }
        q[i] = c;
    }
    trim(&mut q);
    trim(&mut r);
    (q, r)
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let l = self.common(other);
        self.lifted(l) == other.lifted(l)
    }
}

impl Eq for CycNumber {}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.order == 1 && rhs.order == 1 {
            return CycNumber::rational(&self.coeffs[0] + &rhs.coeffs[0]);
        }
        let l = self.common(rhs);
        let (mut a, b) = (self.lifted(l), rhs.lifted(l));
        if a.len() < b.len() {
            a.resize(b.len(), Rat::zero());
        }
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x += y;
        }
        CycNumber::make(l, a)
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self + &(-rhs)
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        if self.is_zero() || rhs.is_zero() {
            return CycNumber::zero();
        }
        if self.order == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.order == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let l = self.common(rhs);
        let p = poly_mul(&self.lifted(l), &rhs.lifted(l));
        CycNumber::make(l, reduce_mod(p, l))
    }
}

macro_rules! forward_cyc {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_cyc!(Add, add);
forward_cyc!(Sub, sub);
forward_cyc!(Mul, mul);

impl From<Rat> for CycNumber {
    fn from(r: Rat) -> Self {
        CycNumber::rational(r)
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z{}", self.order)?,
                _ => write!(f, "({c})*z{}^{k}", self.order)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct CycRepr {
    order: u32,
    coeffs: Vec<Rat>,
}

impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_rational() {
            Some(r) => r.serialize(s),
            None => CycRepr { order: self.order, coeffs: self.coeffs.clone() }.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for CycNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<CycNumber, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            R(Rat),
            C(CycRepr),
        }
        Ok(match Raw::deserialize(d)? {
            Raw::R(r) => CycNumber::rational(r),
            Raw::C(c) => CycNumber::from_coeffs(c.order, c.coeffs),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(9), 6);
    }

    #[test]
    fn i_squared() {
        let i = CycNumber::i();
        assert_eq!(&i * &i, CycNumber::int(-1));
        assert!((&i * &i).is_rational());
    }

    #[test]
    fn mixed_orders_lift() {
        let a = CycNumber::zeta(3, 1);
        let b = CycNumber::i();
        let p = &a * &b;
        assert_eq!(p.order(), 12);
        assert_eq!(p, CycNumber::zeta(12, 7));
        assert_eq!(CycNumber::zeta(6, 2), CycNumber::zeta(3, 1));
    }

    #[test]
    fn inverse() {
        let x = &CycNumber::one() - &CycNumber::zeta(5, 2);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        let half = CycNumber::rational(rat(1, 2));
        assert_eq!(half.inv().unwrap(), CycNumber::int(2));
    }

    #[test]
    fn conj_of_root() {
        assert_eq!(CycNumber::zeta(12, 5).conj(), CycNumber::zeta(12, 7));
    }
}
