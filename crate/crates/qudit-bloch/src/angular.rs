//! Exact Clebsch-Gordan coefficients.
//!
//! Angular momenta are kept as [`HalfInteger`] (twice the value, so 1/2 is
//! exact). Coefficients follow the Condon-Shortley phase convention and are
//! evaluated from the Racah closed form with exact big-integer factorials:
//! the whole radicand is accumulated as one big rational and only the final
//! square root happens in floating point, so there is no cancellation loss
//! even at the largest j this crate needs (j = 31/2 for dimension 32).

use std::collections::HashMap;
use std::ops::{Add, Neg, Sub};
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Angular momentum quantum number stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    /// From twice the value: `HalfInteger::new(3)` is 3/2.
    pub const fn new(twice_value: i64) -> Self {
        Self { twice: twice_value }
    }

    /// From an integer value.
    pub const fn from_int(value: i64) -> Self {
        Self { twice: 2 * value }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub const fn abs(self) -> Self {
        Self {
            twice: self.twice.abs(),
        }
    }

    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }
}

impl Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.twice + rhs.twice)
    }
}

impl Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.twice - rhs.twice)
    }
}

impl Neg for HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> Self {
        Self::new(-self.twice)
    }
}

impl std::fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Full label of a Clebsch-Gordan coefficient C^{J M}_{j1 m1, j2 m2}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CgLabel {
    pub j1: HalfInteger,
    pub m1: HalfInteger,
    pub j2: HalfInteger,
    pub m2: HalfInteger,
    pub j: HalfInteger,
    pub m: HalfInteger,
}

impl CgLabel {
    pub fn new(
        j1: HalfInteger,
        m1: HalfInteger,
        j2: HalfInteger,
        m2: HalfInteger,
        j: HalfInteger,
        m: HalfInteger,
    ) -> Result<Self> {
        let label = Self {
            j1,
            m1,
            j2,
            m2,
            j,
            m,
        };
        label.validate()?;
        Ok(label)
    }

    fn validate(&self) -> Result<()> {
        for (j, m, name) in [
            (self.j1, self.m1, "j1"),
            (self.j2, self.m2, "j2"),
            (self.j, self.m, "J"),
        ] {
            if j.is_negative() {
                return Err(Error::InvalidAngularMomentum {
                    reason: format!("{name} = {j} must be nonnegative"),
                });
            }
            if m.abs() > j {
                return Err(Error::InvalidAngularMomentum {
                    reason: format!("|m| = {} exceeds {name} = {j}", m.abs()),
                });
            }
            // m must run over j, j-1, ..., -j.
            if (j.twice() - m.twice()) % 2 != 0 {
                return Err(Error::InvalidAngularMomentum {
                    reason: format!("m = {m} is not of the form {name} - integer"),
                });
            }
        }
        Ok(())
    }
}

fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::from(1u32);
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Twice-value → factorial argument. `None` when not a nonnegative integer.
fn as_factorial_arg(twice: i64) -> Option<u64> {
    if twice >= 0 && twice % 2 == 0 {
        Some((twice / 2) as u64)
    } else {
        None
    }
}

static CG_CACHE: LazyLock<Mutex<HashMap<CgLabel, f64>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Clebsch-Gordan coefficient C^{J M}_{j1 m1, j2 m2} (Condon-Shortley).
///
/// Returns exactly 0 when m1 + m2 ≠ M or when (j1, j2, J) violates the
/// triangle rule. The Racah sum runs over exact rationals; the only
/// floating-point step is the final square root. Values are memoized.
pub fn clebsch_gordan(label: &CgLabel) -> Result<f64> {
    label.validate()?;

    if label.m1 + label.m2 != label.m {
        return Ok(0.0);
    }
    // Triangle rule, including the parity requirement that j1 + j2 + J is
    // an integer.
    let tri = [
        label.j1 + label.j2 - label.j,
        label.j1 - label.j2 + label.j,
        label.j2 - label.j1 + label.j,
    ];
    if tri.iter().any(|t| as_factorial_arg(t.twice()).is_none()) {
        return Ok(0.0);
    }

    if let Some(&v) = CG_CACHE.lock().expect("cg cache lock").get(label) {
        return Ok(v);
    }

    let value = racah_value(label);
    CG_CACHE
        .lock()
        .expect("cg cache lock")
        .insert(*label, value);
    Ok(value)
}

/// Racah closed form. Caller has already checked selection and triangle
/// rules, so all factorial arguments below are nonnegative integers.
fn racah_value(label: &CgLabel) -> f64 {
    let arg = |twice: i64| as_factorial_arg(twice).expect("validated factorial argument");

    let j1 = label.j1.twice();
    let m1 = label.m1.twice();
    let j2 = label.j2.twice();
    let m2 = label.m2.twice();
    let j = label.j.twice();
    let m = label.m.twice();

    // Δ(j1 j2 J) = (j1+j2-J)! (j1-j2+J)! (-j1+j2+J)! / (j1+j2+J+1)!
    let delta = BigRational::new(
        factorial(arg(j1 + j2 - j)) * factorial(arg(j1 - j2 + j)) * factorial(arg(j2 - j1 + j)),
        factorial(arg(j1 + j2 + j) + 1),
    );
    let weights = BigRational::from_integer(
        factorial(arg(j1 + m1))
            * factorial(arg(j1 - m1))
            * factorial(arg(j2 + m2))
            * factorial(arg(j2 - m2))
            * factorial(arg(j + m))
            * factorial(arg(j - m)),
    );
    let two_j_plus_1 = BigRational::from_integer(BigInt::from(j + 1));

    // Summation index bounds keep every factorial argument nonnegative.
    let k_min = 0i64.max((j2 - j - m1) / 2).max((j1 + m2 - j) / 2);
    let k_max = (arg(j1 + j2 - j) as i64)
        .min(arg(j1 - m1) as i64)
        .min(arg(j2 + m2) as i64);

    let mut sum = BigRational::zero();
    for k in k_min..=k_max {
        let denom = factorial(k as u64)
            * factorial(arg(j1 + j2 - j) - k as u64)
            * factorial(arg(j1 - m1) - k as u64)
            * factorial(arg(j2 + m2) - k as u64)
            * factorial((((j - j2 + m1) / 2) + k) as u64)
            * factorial((((j - j1 - m2) / 2) + k) as u64);
        let term = BigRational::new(BigInt::from(1), denom);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return 0.0;
    }

    let radicand = two_j_plus_1 * delta * weights * &sum * &sum;
    let magnitude = radicand
        .to_f64()
        .expect("radicand representable as f64")
        .sqrt();
    if sum.is_negative() {
        -magnitude
    } else {
        magnitude
    }
}

/// Evaluates the sum rule
/// Σ_{c,γ} (2c+1)/(2b+1) C^{bβ}_{aα,cγ} C^{bβ'}_{aα',cγ}
/// and returns `(computed, expected)` with expected = δ_{αα'} δ_{ββ'}.
pub fn cg_sum_rule_check(
    a: HalfInteger,
    b: HalfInteger,
    beta: HalfInteger,
    beta_prime: HalfInteger,
    alpha: HalfInteger,
    alpha_prime: HalfInteger,
) -> Result<(f64, f64)> {
    let mut computed = 0.0;
    let c_min = (a - b).abs();
    let c_max = a + b;
    let mut c = c_min;
    while c <= c_max {
        let mut gamma = -c;
        while gamma <= c {
            // Only γ with α + γ = β (resp. β') contributes; other labels
            // are zeroed by the selection rule but skipping keeps this fast.
            if alpha + gamma == beta && alpha_prime + gamma == beta_prime {
                let lhs = clebsch_gordan(&CgLabel::new(a, alpha, c, gamma, b, beta)?)?;
                let rhs = clebsch_gordan(&CgLabel::new(a, alpha_prime, c, gamma, b, beta_prime)?)?;
                let weight = (c.twice() + 1) as f64 / (b.twice() + 1) as f64;
                computed += weight * lhs * rhs;
            }
            gamma = gamma + HalfInteger::from_int(1);
        }
        c = c + HalfInteger::from_int(1);
    }
    let expected = if alpha == alpha_prime && beta == beta_prime {
        1.0
    } else {
        0.0
    };
    Ok((computed, expected))
}
