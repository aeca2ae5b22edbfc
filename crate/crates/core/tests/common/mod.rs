#![allow(dead_code)]

use leibniz::algebra::trivial_algebra;
use leibniz::bimodule::Bimodule;
use leibniz::linear::solve;
use leibniz::{Mat, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn jordan(size: usize, lambda: i64) -> Mat {
    Mat::from_fn(size, size, |i, j| {
        if i == j {
            Scalar::from(lambda)
        } else if j == i + 1 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

fn block_diagonal(blocks: &[Mat]) -> Mat {
    let n: usize = blocks.iter().map(Mat::rows).sum();
    let mut out = Mat::zeros(n, n);
    let mut at = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.set(at + i, at + j, b.get(i, j).clone());
            }
        }
        at += b.rows();
    }
    out
}

/// A unimodular integer matrix with small entries.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> Mat {
    let upper = Mat::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Scalar::one(),
        std::cmp::Ordering::Less => Scalar::from(rng.gen_range(-2i64..=2)),
        std::cmp::Ordering::Greater => Scalar::zero(),
    });
    let lower = Mat::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Scalar::one(),
        std::cmp::Ordering::Greater => Scalar::from(rng.gen_range(-2i64..=2)),
        std::cmp::Ordering::Less => Scalar::zero(),
    });
    &upper * &lower
}

/// A random bimodule over the trivial algebra of dimension at most
/// `max_dim`: a direct sum of antisymmetric and symmetric Jordan blocks and
/// nonsplit two-dimensional extensions, in a random basis.
pub fn random_trivial_bimodule(rng: &mut impl Rng, max_dim: usize) -> Bimodule {
    let target = rng.gen_range(1..=max_dim);
    let (mut lefts, mut rights) = (Vec::new(), Vec::new());
    let mut dim = 0;
    while dim < target {
        let room = target - dim;
        let kind = rng.gen_range(0..3);
        if kind == 2 && room >= 2 {
            let r = rng.gen_range(-2i64..=2);
            let s = rng.gen_range(-2i64..=2);
            rights.push(Mat::from_i64(&[&[0, r], &[0, 0]]));
            lefts.push(Mat::from_i64(&[&[0, s - r], &[0, 0]]));
            dim += 2;
            continue;
        }
        let size = rng.gen_range(1..=room.min(3));
        let lambda = rng.gen_range(-2i64..=2);
        let j = jordan(size, lambda);
        if kind == 0 {
            rights.push(Mat::zeros(size, size));
        } else {
            rights.push(-&j);
        }
        lefts.push(j);
        dim += size;
    }
    let p = random_unimodular(rng, dim);
    let inv = solve(&p, &Mat::identity(dim)).expect("unimodular matrices are invertible");
    let conj = |m: &Mat| &(&p * m) * &inv;
    let h = trivial_algebra();
    Bimodule::new(&h, dim, vec![conj(&block_diagonal(&lefts))], vec![conj(&block_diagonal(&rights))])
        .expect("generated bimodule satisfies the axioms")
}
