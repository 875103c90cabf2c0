//! q-polynomials f(x) = sum_i a_i x^(q^i) with q-degree < 6, viewed as
//! F_q-linear maps of F_{q^6}; their Dickson matrices; and kernel dimensions
//! both by brute force and by the nested-minor determinant criterion.

use crate::error::{Error, Result};
use crate::field::{Elt, TowerCtx};
use serde::Serialize;

/// Coefficient vector (a_0, ..., a_5) of sum a_i x^(q^i).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LinPoly {
    pub coeffs: [Elt; 6],
}

impl LinPoly {
    pub fn new(coeffs: [Elt; 6]) -> LinPoly {
        LinPoly { coeffs }
    }

    pub fn zero(ctx: &TowerCtx) -> LinPoly {
        LinPoly {
            coeffs: std::array::from_fn(|_| ctx.zero()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Elt::is_zero)
    }
}

/// f(x) = sum a_i x^(q^i).
pub fn evaluate(ctx: &TowerCtx, f: &LinPoly, x: &Elt) -> Elt {
    let mut acc = ctx.zero();
    for (i, a) in f.coeffs.iter().enumerate() {
        if !a.is_zero() {
            acc = ctx.add(&acc, &ctx.mul(a, &ctx.frobenius(x, i as u32)));
        }
    }
    acc
}

/// Dense square matrix over F_{q^6}, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    n: usize,
    entries: Vec<Elt>,
}

impl Mat {
    pub fn from_rows(rows: Vec<Vec<Elt>>) -> Mat {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Mat {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &Elt {
        &self.entries[i * self.n + j]
    }
}

/// The Dickson matrix of f: entry (i, j) = a_((j-i) mod 6)^(q^i).
/// f is invertible iff this matrix is, and more precisely the kernel
/// dimension of f equals 6 minus its rank.
pub fn dickson(ctx: &TowerCtx, f: &LinPoly) -> Mat {
    let n = 6usize;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let a = &f.coeffs[(j + n - i) % n];
            entries.push(ctx.frobenius(a, i as u32));
        }
    }
    Mat { n, entries }
}

/// The trailing minor M_r: last 6-r columns by first 6-r rows, r in [0, 6).
pub fn submatrix_mr(m: &Mat, r: usize) -> Result<Mat> {
    if r >= m.n {
        return Err(Error::IndexOutOfRange {
            index: r as u64,
            bound: m.n as u64 - 1,
        });
    }
    let k = m.n - r;
    let mut entries = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            entries.push(m.at(i, j + r).clone());
        }
    }
    Ok(Mat { n: k, entries })
}

/// Exact determinant by fraction-tracking Gaussian elimination: row updates
/// are pivot*row - factor*pivot_row (no divisions), and the accumulated
/// pivot scale is divided out once at the end.
pub fn det(ctx: &TowerCtx, m: &Mat) -> Elt {
    let n = m.n;
    let mut w = m.entries.clone();
    let mut scale = ctx.one();
    let mut negate = false;
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !w[r * n + col].is_zero()) else {
            return ctx.zero();
        };
        if pr != col {
            for c in col..n {
                w.swap(col * n + c, pr * n + c);
            }
            negate = !negate;
        }
        let pivot = w[col * n + col].clone();
        for r in col + 1..n {
            if w[r * n + col].is_zero() {
                continue;
            }
            let f = w[r * n + col].clone();
            for c in col..n {
                let t = ctx.sub(
                    &ctx.mul(&pivot, &w[r * n + c]),
                    &ctx.mul(&f, &w[col * n + c]),
                );
                w[r * n + c] = t;
            }
            scale = ctx.mul(&scale, &pivot);
        }
    }
    let mut d = ctx.one();
    for i in 0..n {
        d = ctx.mul(&d, &w[i * n + i]);
    }
    if negate {
        d = ctx.neg(&d);
    }
    ctx.div(&d, &scale).expect("pivots are nonzero")
}

/// Nonsingularity test with early exit and no inversions; used by the hot
/// kernel scans where only det != 0 matters.
pub fn nonsingular(ctx: &TowerCtx, m: &Mat) -> bool {
    let n = m.n;
    let mut w = m.entries.clone();
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !w[r * n + col].is_zero()) else {
            return false;
        };
        if pr != col {
            for c in col..n {
                w.swap(col * n + c, pr * n + c);
            }
        }
        let pivot = w[col * n + col].clone();
        for r in col + 1..n {
            if w[r * n + col].is_zero() {
                continue;
            }
            let f = w[r * n + col].clone();
            for c in col + 1..n {
                let t = ctx.sub(
                    &ctx.mul(&pivot, &w[r * n + c]),
                    &ctx.mul(&f, &w[col * n + c]),
                );
                w[r * n + c] = t;
            }
            w[r * n + col] = ctx.zero();
        }
    }
    true
}

/// Row rank over F_{q^6} (scaled eliminations preserve the row space).
pub fn rank(ctx: &TowerCtx, m: &Mat) -> usize {
    let n = m.n;
    let mut w = m.entries.clone();
    let mut r = 0usize;
    for col in 0..n {
        let Some(pr) = (r..n).find(|&i| !w[i * n + col].is_zero()) else {
            continue;
        };
        if pr != r {
            for c in col..n {
                w.swap(r * n + c, pr * n + c);
            }
        }
        let pivot = w[r * n + col].clone();
        for i in r + 1..n {
            if w[i * n + col].is_zero() {
                continue;
            }
            let f = w[i * n + col].clone();
            for c in col..n {
                let t = ctx.sub(&ctx.mul(&pivot, &w[i * n + c]), &ctx.mul(&f, &w[r * n + c]));
                w[i * n + c] = t;
            }
        }
        r += 1;
        if r == n {
            break;
        }
    }
    r
}

/// Kernel dimension read off an already-assembled Dickson matrix: the
/// smallest t with det(M_t) != 0, scanning t upward; 6 for the zero matrix.
pub fn kernel_dim_of_matrix(ctx: &TowerCtx, d: &Mat) -> u32 {
    for t in 0..d.n() {
        let m = submatrix_mr(d, t).expect("t < n");
        if nonsingular(ctx, &m) {
            return t as u32;
        }
    }
    d.n() as u32
}

/// Kernel dimension of f as an F_q-linear map, by the minor criterion.
pub fn kernel_dim_dickson(ctx: &TowerCtx, f: &LinPoly) -> u32 {
    kernel_dim_of_matrix(ctx, &dickson(ctx, f))
}

/// Kernel dimension by enumerating all of F_{q^6} and counting roots;
/// guards the field size, and insists the root count is a q-power.
pub fn kernel_dim_brute(ctx: &TowerCtx, f: &LinPoly) -> Result<u32> {
    let size = ctx.field_size();
    if size > 1 << 24 {
        return Err(Error::EnumerationTooLarge {
            size,
            limit: 1 << 24,
        });
    }
    let mut count: u128 = 0;
    for x in ctx.all_elements() {
        if evaluate(ctx, f, &x).is_zero() {
            count += 1;
        }
    }
    let mut dim = 0u32;
    let mut power = 1u128;
    while power < count {
        power *= ctx.q() as u128;
        dim += 1;
    }
    if power != count {
        return Err(Error::NonSubspaceKernel { count });
    }
    Ok(dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx(p: u64, e: u32) -> TowerCtx {
        TowerCtx::from_pe(p, e).unwrap()
    }

    fn random_poly<R: rand::Rng>(c: &TowerCtx, rng: &mut R) -> LinPoly {
        LinPoly::new(std::array::from_fn(|_| c.random_elt(rng)))
    }

    /// Laplace expansion along the first row: an independent determinant.
    fn det_cofactor(c: &TowerCtx, m: &Mat) -> Elt {
        let n = m.n();
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut acc = c.zero();
        for j in 0..n {
            if m.at(0, j).is_zero() {
                continue;
            }
            let rows: Vec<Vec<Elt>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&col| col != j)
                        .map(|col| m.at(i, col).clone())
                        .collect()
                })
                .collect();
            let term = c.mul(m.at(0, j), &det_cofactor(c, &Mat::from_rows(rows)));
            acc = if j % 2 == 0 {
                c.add(&acc, &term)
            } else {
                c.sub(&acc, &term)
            };
        }
        acc
    }

    fn identity_poly(c: &TowerCtx) -> LinPoly {
        let mut f = LinPoly::zero(c);
        f.coeffs[0] = c.one();
        f
    }

    #[test]
    fn evaluate_is_fq_linear() {
        let c = ctx(3, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let fq = c.subfield_elements(1).unwrap();
        for _ in 0..30 {
            let f = random_poly(&c, &mut rng);
            let x = c.random_elt(&mut rng);
            let y = c.random_elt(&mut rng);
            assert_eq!(
                evaluate(&c, &f, &c.add(&x, &y)),
                c.add(&evaluate(&c, &f, &x), &evaluate(&c, &f, &y))
            );
            for s in &fq {
                assert_eq!(
                    evaluate(&c, &f, &c.mul(s, &x)),
                    c.mul(s, &evaluate(&c, &f, &x))
                );
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        let c = ctx(3, 1);
        let id = identity_poly(&c);
        // x^q - x kills F_q; the all-ones polynomial is the trace to F_q.
        let mut frob_minus_id = LinPoly::zero(&c);
        frob_minus_id.coeffs[0] = c.from_int(-1);
        frob_minus_id.coeffs[1] = c.one();
        let trace = LinPoly::new(std::array::from_fn(|_| c.one()));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let x = c.random_elt(&mut rng);
            assert_eq!(evaluate(&c, &id, &x), x);
            let t = evaluate(&c, &trace, &x);
            assert!(c.in_subfield(&t, 1).unwrap());
        }
        for s in c.subfield_elements(1).unwrap() {
            assert!(evaluate(&c, &frob_minus_id, &s).is_zero());
        }
    }

    #[test]
    fn dickson_of_r_poly_matches_printed_rows() {
        let c = ctx(3, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let m = c.random_elt(&mut rng);
        let b = c.random_elt(&mut rng);
        let f = LinPoly::new([
            m.clone(),
            b.clone(),
            c.zero(),
            c.zero(),
            c.one(),
            c.zero(),
        ]);
        let d = dickson(&c, &f);
        let row0 = [m.clone(), b.clone(), c.zero(), c.zero(), c.one(), c.zero()];
        for (j, want) in row0.iter().enumerate() {
            assert_eq!(d.at(0, j), want);
        }
        let row5 = [
            c.frobenius(&b, 5),
            c.zero(),
            c.zero(),
            c.one(),
            c.zero(),
            c.frobenius(&m, 5),
        ];
        for (j, want) in row5.iter().enumerate() {
            assert_eq!(d.at(5, j), want);
        }
        // Row i is the Frobenius twist of a right-shift of row i-1.
        for i in 1..6 {
            for j in 0..6 {
                assert_eq!(
                    *d.at(i, j),
                    c.frobenius(d.at(i - 1, (j + 5) % 6), 1),
                    "row {i} col {j}"
                );
            }
        }
        // Identity polynomial -> identity matrix.
        let di = dickson(&c, &identity_poly(&c));
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(di.at(i, j).is_zero(), i != j);
                if i == j {
                    assert!(di.at(i, j).is_one(&c));
                }
            }
        }
    }

    #[test]
    fn dickson_is_additive() {
        let c = ctx(2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let f = random_poly(&c, &mut rng);
            let g = random_poly(&c, &mut rng);
            let sum = LinPoly::new(std::array::from_fn(|i| c.add(&f.coeffs[i], &g.coeffs[i])));
            let (df, dg, ds) = (dickson(&c, &f), dickson(&c, &g), dickson(&c, &sum));
            for i in 0..6 {
                for j in 0..6 {
                    assert_eq!(*ds.at(i, j), c.add(df.at(i, j), dg.at(i, j)));
                }
            }
        }
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let c = ctx(3, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for trial in 0..200 {
            let mut rows: Vec<Vec<Elt>> = (0..6)
                .map(|_| (0..6).map(|_| c.random_elt(&mut rng)).collect())
                .collect();
            if trial % 4 == 0 {
                // Force singularity: duplicate a row.
                rows[5] = rows[0].clone();
            }
            let m = Mat::from_rows(rows);
            assert_eq!(det(&c, &m), det_cofactor(&c, &m));
        }
        let id = dickson(&c, &identity_poly(&c));
        assert!(det(&c, &id).is_one(&c));
        assert!(nonsingular(&c, &id));
    }

    #[test]
    fn submatrix_shapes() {
        let c = ctx(2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let d = dickson(&c, &random_poly(&c, &mut rng));
        assert_eq!(submatrix_mr(&d, 0).unwrap(), d);
        let last = submatrix_mr(&d, 5).unwrap();
        assert_eq!(last.n(), 1);
        assert_eq!(last.at(0, 0), d.at(0, 5));
        assert!(matches!(
            submatrix_mr(&d, 6),
            Err(Error::IndexOutOfRange { index: 6, bound: 5 })
        ));
    }

    // The two 4x4 corner blocks of the matrix of r_{m,b} have closed-form
    // determinants: top-right (first four rows, last four columns) gives
    // m^(q^2+q^3); bottom-left (last four rows, first four columns) gives
    // -(N-1)^(q^2) = -(N-1)^(q^5), which is independent of m and nonzero
    // whenever N != 1 — hence the matrix always has rank at least 4.
    #[test]
    fn corner_block_determinants() {
        for c in [ctx(2, 1), ctx(3, 1)] {
            let mut rng = ChaCha8Rng::seed_from_u64(16);
            for _ in 0..40 {
                let m = c.random_elt(&mut rng);
                let b = c.random_elt(&mut rng);
                let f = LinPoly::new([
                    m.clone(),
                    b.clone(),
                    c.zero(),
                    c.zero(),
                    c.one(),
                    c.zero(),
                ]);
                let d = dickson(&c, &f);
                let block = |ri: std::ops::Range<usize>, cj: std::ops::Range<usize>| {
                    Mat::from_rows(
                        ri.map(|i| cj.clone().map(|j| d.at(i, j).clone()).collect())
                            .collect(),
                    )
                };
                let top_right = block(0..4, 2..6);
                let want_tr = c.mul(&c.frobenius(&m, 2), &c.frobenius(&m, 3));
                assert_eq!(det(&c, &top_right), want_tr);

                let bottom_left = block(2..6, 0..4);
                let n = c.norm_q6_q3(&b);
                let nm1 = c.sub(&n, &c.one());
                let want_bl = c.neg(&c.frobenius(&nm1, 2));
                let got_bl = det(&c, &bottom_left);
                assert_eq!(got_bl, want_bl);
                assert_eq!(got_bl, c.neg(&c.frobenius(&nm1, 5)));
                if !b.is_zero() && !n.is_one(&c) {
                    assert!(!got_bl.is_zero());
                    assert!(rank(&c, &d) >= 4);
                }
            }
        }
    }

    #[test]
    fn kernel_dimension_canonical_maps() {
        for c in [ctx(2, 1), ctx(3, 1)] {
            let id = identity_poly(&c);
            assert_eq!(kernel_dim_dickson(&c, &id), 0);
            assert_eq!(kernel_dim_brute(&c, &id).unwrap(), 0);

            for (i, dim) in [(1usize, 1u32), (2, 2), (3, 3)] {
                // x^(q^i) - x has kernel F_{q^i}.
                let mut f = LinPoly::zero(&c);
                f.coeffs[0] = c.from_int(-1);
                f.coeffs[i] = c.one();
                assert_eq!(kernel_dim_dickson(&c, &f), dim);
                assert_eq!(kernel_dim_brute(&c, &f).unwrap(), dim);
            }

            let trace = LinPoly::new(std::array::from_fn(|_| c.one()));
            assert_eq!(kernel_dim_dickson(&c, &trace), 5);
            assert_eq!(kernel_dim_brute(&c, &trace).unwrap(), 5);

            let zero = LinPoly::zero(&c);
            assert_eq!(kernel_dim_dickson(&c, &zero), 6);
            assert_eq!(kernel_dim_brute(&c, &zero).unwrap(), 6);
            assert_eq!(rank(&c, &dickson(&c, &zero)), 0);
        }
    }

    #[test]
    fn kernel_dimension_randomized_agreement() {
        for q in [2u64, 3, 4] {
            let c = TowerCtx::from_prime_power(q).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(17);
            for _ in 0..100 {
                let f = random_poly(&c, &mut rng);
                let brute = kernel_dim_brute(&c, &f).unwrap();
                assert_eq!(kernel_dim_dickson(&c, &f), brute, "q = {q}");
                assert_eq!(rank(&c, &dickson(&c, &f)) as u32, 6 - brute, "q = {q}");
            }
        }
    }

    #[test]
    fn brute_kernel_guards_field_size() {
        let c = ctx(17, 1);
        let f = identity_poly(&c);
        assert!(matches!(
            kernel_dim_brute(&c, &f),
            Err(Error::EnumerationTooLarge { .. })
        ));
        // The minor criterion has no such limit.
        assert_eq!(kernel_dim_dickson(&c, &f), 0);
    }
}
