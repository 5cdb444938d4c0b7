use core::fmt;
use core::ops::Index;

use smallvec::SmallVec;

/// Exponent vector `x₁^{i₁}⋯x_n^{i_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u64; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(smallvec::smallvec![0; nvars])
    }

    pub fn new(exps: impl AsRef<[u64]>) -> Self {
        Monomial(SmallVec::from_slice(exps.as_ref()))
    }

    /// `x_i^k`
    pub fn var(nvars: usize, i: usize, k: u64) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = k;
        m
    }

    #[inline]
    pub fn exps(&self) -> &[u64] {
        &self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn checked_pow(&self, k: u64) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for &e in &self.0 {
            out.push(e.checked_mul(k)?);
        }
        Some(Monomial(out))
    }

    /// Splits `v = q·quot + rem` componentwise with `0 ≤ rem < q`.
    pub fn div_rem(&self, q: u64) -> (Monomial, Monomial) {
        let quot = self.0.iter().map(|&e| e / q).collect();
        let rem = self.0.iter().map(|&e| e % q).collect();
        (Monomial(quot), Monomial(rem))
    }
}

impl Index<usize> for Monomial {
    type Output = u64;
    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}
