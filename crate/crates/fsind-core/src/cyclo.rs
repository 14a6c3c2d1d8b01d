//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Elements are residues of rational polynomials modulo the `N`-th
//! cyclotomic polynomial, so equality is coefficient equality on the
//! canonical form of length `phi(N)`. Coefficients are arbitrary-precision
//! rationals; no floating point enters the pipeline.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("value is not a rational integer: {0}")]
    NotAnInteger(String),
    #[error("value is not rational: {0}")]
    NotRational(String),
}

/// Per-conductor data: the cyclotomic polynomial and the reduced powers
/// `zeta_N^k` for `k < N`, each as a coefficient vector of length `phi(N)`.
struct Conductor {
    phi: usize,
    /// power_table[k] = canonical coefficients of zeta^k
    power_table: Vec<Vec<BigRational>>,
}

static CONDUCTORS: Lazy<Mutex<HashMap<u64, &'static Conductor>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn conductor(n: u64) -> &'static Conductor {
    let mut map = CONDUCTORS.lock().unwrap();
    if let Some(c) = map.get(&n) {
        return c;
    }
    let phi_poly = cyclotomic_polynomial(n);
    let phi = phi_poly.len() - 1;
    // reduce x^k mod Phi_N incrementally
    let mut power_table = Vec::with_capacity(n as usize);
    let mut current = vec![BigRational::zero(); phi.max(1)];
    if phi > 0 {
        current[0] = BigRational::one();
    }
    for _ in 0..n {
        power_table.push(current.clone());
        current = shift_reduce(&current, &phi_poly);
    }
    let boxed: &'static Conductor = Box::leak(Box::new(Conductor { phi, power_table }));
    map.insert(n, boxed);
    boxed
}

/// Multiplies by x and reduces modulo the monic integer polynomial `modulus`
/// (given low-to-high with leading coefficient 1).
fn shift_reduce(coeffs: &[BigRational], modulus: &[BigInt]) -> Vec<BigRational> {
    let phi = modulus.len() - 1;
    let mut out = vec![BigRational::zero(); phi.max(1)];
    if phi == 0 {
        return out;
    }
    for i in 0..phi - 1 {
        out[i + 1] = coeffs[i].clone();
    }
    let lead = coeffs[phi - 1].clone();
    if !lead.is_zero() {
        for i in 0..phi {
            out[i] -= &lead * BigRational::from(modulus[i].clone());
        }
    }
    out
}

/// `Phi_N(x)` by the recursive division formula, low-to-high coefficients.
fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // x^n - 1
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            poly = exact_div(&poly, &phi_d);
        }
    }
    poly
}

/// Exact division of integer polynomials (low-to-high), divisor monic.
fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd].clone();
        quot[i] = c.clone();
        if !c.is_zero() {
            for j in 0..=dd {
                rem[i + j] -= &c * &den[j];
            }
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// An element of `Q(zeta_N)` in canonical reduced form.
#[derive(Clone)]
pub struct Cyclotomic {
    n: u64,
    /// length phi(N); coefficient of zeta^i at index i
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Cyclotomic {
        Cyclotomic {
            n: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Cyclotomic {
        Cyclotomic::from_integer(1)
    }

    pub fn from_integer(k: i64) -> Cyclotomic {
        Cyclotomic {
            n: 1,
            coeffs: vec![BigRational::from(BigInt::from(k))],
        }
    }

    pub fn from_rational(r: BigRational) -> Cyclotomic {
        Cyclotomic { n: 1, coeffs: vec![r] }
    }

    /// `zeta_N^k` in reduced form.
    pub fn root_of_unity(n: u64, k: u64) -> Cyclotomic {
        assert!(n >= 1);
        let k = k % n;
        let c = conductor(n);
        Cyclotomic {
            n,
            coeffs: c.power_table[k as usize].clone(),
        }
        .normalized()
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Drops to the smallest representation we track: conductor 1 whenever
    /// the value is rational.
    fn normalized(mut self) -> Cyclotomic {
        if self.n > 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            self.coeffs.truncate(1);
            self.n = 1;
        }
        self
    }

    /// Re-expresses the element in `Q(zeta_m)` where `n | m`.
    fn embed(&self, m: u64) -> Cyclotomic {
        if self.n == m {
            return self.clone();
        }
        debug_assert_eq!(m % self.n, 0);
        let stride = m / self.n;
        let cm = conductor(m);
        let mut coeffs = vec![BigRational::zero(); cm.phi.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let pow = &cm.power_table[(i as u64 * stride % m) as usize];
            for (j, p) in pow.iter().enumerate() {
                coeffs[j] += a * p;
            }
        }
        Cyclotomic { n: m, coeffs }
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = self.n.lcm(&other.n);
        (self.embed(m), other.embed(m))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a.normalized()
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a.normalized()
    }

    pub fn neg(&self) -> Cyclotomic {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        let c = conductor(a.n);
        let phi = c.phi.max(1);
        // schoolbook product, then reduce the overflow terms with the power
        // table (x^(phi+t) = x^t * x^phi, already tabulated via zeta powers)
        let mut raw = vec![BigRational::zero(); 2 * phi];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        let mut coeffs: Vec<BigRational> = raw[..phi].to_vec();
        for t in phi..2 * phi {
            if raw[t].is_zero() {
                continue;
            }
            let pow = &c.power_table[(t as u64 % a.n) as usize];
            for (j, p) in pow.iter().enumerate() {
                coeffs[j] += &raw[t] * p;
            }
        }
        Cyclotomic { n: a.n, coeffs }.normalized()
    }

    pub fn scale(&self, k: &BigRational) -> Cyclotomic {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c *= k;
        }
        out.normalized()
    }

    pub fn scale_int(&self, k: i64) -> Cyclotomic {
        self.scale(&BigRational::from(BigInt::from(k)))
    }

    /// Complex conjugation: `zeta_N^k -> zeta_N^(N-k)`.
    pub fn conj(&self) -> Cyclotomic {
        if self.n == 1 {
            return self.clone();
        }
        let c = conductor(self.n);
        let mut coeffs = vec![BigRational::zero(); c.phi.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let k = (self.n - i as u64 % self.n) % self.n;
            let pow = &c.power_table[k as usize];
            for (j, p) in pow.iter().enumerate() {
                coeffs[j] += a * p;
            }
        }
        Cyclotomic { n: self.n, coeffs }.normalized()
    }

    pub fn as_rational(&self) -> Result<BigRational, CycloError> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Ok(self.coeffs[0].clone())
        } else {
            Err(CycloError::NotRational(self.to_string()))
        }
    }

    /// The integer value, or a typed failure carrying the offending value.
    pub fn as_integer(&self) -> Result<BigInt, CycloError> {
        let r = self
            .as_rational()
            .map_err(|_| CycloError::NotAnInteger(self.to_string()))?;
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(CycloError::NotAnInteger(self.to_string()))
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Cyclotomic) -> bool {
        if self.n == other.n {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Cyclotomic {
    /// Coefficient vector at conductor `m` (`n | m`), usable as a uniform
    /// comparison key across elements of mixed conductor.
    pub fn sort_key(&self, m: u64) -> Vec<BigRational> {
        self.embed(m).coeffs
    }
}

impl fmt::Display for Cyclotomic {
    /// `E(N)^k` linear-combination text: `1/2+E(4)-3*E(4)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign_prefix = if first {
                if c.is_negative() { "-" } else { "" }
            } else if c.is_negative() {
                "-"
            } else {
                "+"
            };
            let mag = c.abs();
            write!(f, "{sign_prefix}")?;
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "E({})", self.n)?;
                } else {
                    write!(f, "E({})^{}", self.n, i)?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
