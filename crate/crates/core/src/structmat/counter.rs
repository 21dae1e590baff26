use std::ops::AddAssign;

use num_bigint::BigInt;

use crate::polycore::rat::{self, Rat};

/// Tally of exact arithmetic performed by a computation.
///
/// `adds` covers additions and subtractions. `max_bits` is the largest bit
/// length of any numerator or denominator produced. `dets` and
/// `vandermonde_solves` count whole kernel invocations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub adds: u64,
    pub muls: u64,
    pub divs: u64,
    pub max_bits: u64,
    pub dets: u64,
    pub vandermonde_solves: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn mul_div(&self) -> u64 {
        self.muls + self.divs
    }

    pub fn total_ops(&self) -> u64 {
        self.adds + self.muls + self.divs
    }

    /// Sums counts, takes the max of `max_bits`.
    pub fn merge(&mut self, other: &OpCounter) {
        self.adds += other.adds;
        self.muls += other.muls;
        self.divs += other.divs;
        self.dets += other.dets;
        self.vandermonde_solves += other.vandermonde_solves;
        self.max_bits = self.max_bits.max(other.max_bits);
    }

    pub fn observe(&mut self, r: &Rat) {
        self.max_bits = self.max_bits.max(rat::bits(r));
    }

    pub fn observe_int(&mut self, v: &BigInt) {
        self.max_bits = self.max_bits.max(v.bits());
    }

    pub fn add(&mut self, a: &Rat, b: &Rat) -> Rat {
        self.adds += 1;
        let r = a + b;
        self.observe(&r);
        r
    }

    pub fn sub(&mut self, a: &Rat, b: &Rat) -> Rat {
        self.adds += 1;
        let r = a - b;
        self.observe(&r);
        r
    }

    pub fn mul(&mut self, a: &Rat, b: &Rat) -> Rat {
        self.muls += 1;
        let r = a * b;
        self.observe(&r);
        r
    }

    pub fn div(&mut self, a: &Rat, b: &Rat) -> Rat {
        self.divs += 1;
        let r = a / b;
        self.observe(&r);
        r
    }
}

impl AddAssign<&OpCounter> for OpCounter {
    fn add_assign(&mut self, rhs: &OpCounter) {
        self.merge(rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::{frac, int};

    #[test]
    fn merge_sums_counts_and_maxes_bits() {
        let mut a = OpCounter::new();
        a.mul(&int(3), &int(5));
        let mut b = OpCounter::new();
        b.add(&int(1 << 20), &int(1));
        b.div(&int(1), &int(3));
        let mut ab = a;
        ab.merge(&b);
        let mut ba = b;
        ba.merge(&a);
        assert_eq!(ab, ba);
        assert_eq!((ab.adds, ab.muls, ab.divs, ab.max_bits), (1, 1, 1, 21));
    }

    #[test]
    fn observe_tracks_denominators() {
        let mut c = OpCounter::new();
        c.observe(&frac(1, 1024));
        assert_eq!(c.max_bits, 11);
    }
}
