//! Fixtures shared by the benchmarks.

use hmorph::io::builtin_algebra;
use hmorph::linalg::{Fp, Matrix};

/// A dense pseudo-random `n x n` matrix over `F_p`, deterministic in `n`.
pub fn dense(p: u32, n: usize) -> Matrix {
    let mut s: u64 = 0x9e37_79b9_7f4a_7c15 ^ n as u64;
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    s ^= s << 13;
                    s ^= s >> 7;
                    s ^= s << 17;
                    (s % p as u64) as i64
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(Fp::new(p).expect("prime"), &rows)
}

pub fn algebra(name: &str) -> hmorph::algebra::Algebra {
    builtin_algebra(name).expect("bundled algebra")
}
