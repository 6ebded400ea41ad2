//! The 64-bit linear congruential generator used for every sampled check.
//!
//! `x ← 6364136223846793005·x + 1442695040888963407 (mod 2^64)`; outputs are
//! the high 32 bits of the new state.

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(Self::MULTIPLIER).wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform in `0..n` (by rejection).
    pub fn below(&mut self, n: u32) -> u32 {
        assert!(n > 0);
        let zone = u32::MAX - (u32::MAX % n);
        loop {
            let x = self.next_u32();
            if x < zone {
                return x % n;
            }
        }
    }

    /// Uniform in `-k..=k`.
    pub fn small_int(&mut self, k: i64) -> i64 {
        self.below((2 * k + 1) as u32) as i64 - k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_outputs_from_zero() {
        let mut r = Lcg::new(0);
        // state_1 = c, state_2 = a·c + c
        assert_eq!(r.next_u32(), (Lcg::INCREMENT >> 32) as u32);
        let s2 = Lcg::INCREMENT.wrapping_mul(Lcg::MULTIPLIER).wrapping_add(Lcg::INCREMENT);
        assert_eq!(r.next_u32(), (s2 >> 32) as u32);
    }

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<u32> = (0..10).scan(Lcg::new(7), |r, _| Some(r.next_u32())).collect();
        let b: Vec<u32> = (0..10).scan(Lcg::new(7), |r, _| Some(r.next_u32())).collect();
        assert_eq!(a, b);
    }
}
