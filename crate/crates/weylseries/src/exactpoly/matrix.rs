use std::fmt;

use super::poly::Poly;
use super::scalar::Coeff;

/// Square matrix over an exact coefficient ring, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<C> {
    size: usize,
    data: Vec<C>,
}

impl<C: Coeff> Mat<C> {
    pub fn identity(size: usize) -> Self {
        let mut data = vec![C::zero(); size * size];
        for i in 0..size {
            data[i * size + i] = C::one();
        }
        Mat { size, data }
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let size = rows.len();
        let mut data = Vec::with_capacity(size * size);
        for row in rows {
            assert_eq!(row.len(), size, "matrix rows must be square");
            data.extend(row);
        }
        Mat { size, data }
    }

    /// Flat row-major constructor.
    pub fn from_flat(size: usize, data: Vec<C>) -> Self {
        assert_eq!(data.len(), size * size, "flat data must be size²");
        Mat { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.size + j] = v;
    }

    pub fn data(&self) -> &[C] {
        &self.data
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.size, rhs.size, "matrix sizes must agree");
        let n = self.size;
        let mut data = vec![C::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        data[i * n + j] += a.clone() * b.clone();
                    }
                }
            }
        }
        Mat { size: n, data }
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.size)
    }

    pub fn map<T: Coeff>(&self, mut f: impl FnMut(&C) -> T) -> Mat<T> {
        Mat {
            size: self.size,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    /// Direct sum along the diagonal.
    pub fn block_diag(blocks: &[Mat<C>]) -> Self {
        let size: usize = blocks.iter().map(|b| b.size).sum();
        let mut out = Mat {
            size,
            data: vec![C::zero(); size * size],
        };
        let mut off = 0;
        for b in blocks {
            for i in 0..b.size {
                for j in 0..b.size {
                    out.data[(off + i) * size + (off + j)] = b.get(i, j).clone();
                }
            }
            off += b.size;
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Mat::identity(self.size);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }
}

impl<C: fmt::Debug> fmt::Debug for Mat<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat{}x{}[", self.size, self.size)?;
        for i in 0..self.size {
            writeln!(f, "  {:?}", &self.data[i * self.size..(i + 1) * self.size])?;
        }
        write!(f, "]")
    }
}

/// Characteristic polynomial `det(t·I − M)`, lowest degree first, via the
/// Berkowitz algorithm. Division-free, so it is exact over any coefficient
/// ring — in particular over machine integers on hot paths and over big
/// integers everywhere else.
pub fn charpoly<C: Coeff>(m: &Mat<C>) -> Poly<C> {
    let n = m.size();
    if n == 0 {
        return Poly::one();
    }
    // p holds the characteristic polynomial of the leading principal k×k
    // block, highest degree first, and is extended one row/column at a time
    // by multiplication with a Toeplitz vector v of Krylov products.
    let mut p = vec![C::one(), -m.get(0, 0).clone()];
    for k in 2..=n {
        let a = k - 1; // size of the previous block
        let row: Vec<&C> = (0..a).map(|j| m.get(k - 1, j)).collect();
        let mut v = Vec::with_capacity(k + 1);
        v.push(C::one());
        v.push(-m.get(k - 1, k - 1).clone());
        // w starts as the new column and is repeatedly advanced by the
        // previous block, producing v[j] = −(row · block^(j−2) · col).
        let mut w: Vec<C> = (0..a).map(|i| m.get(i, k - 1).clone()).collect();
        for j in 2..=k {
            let mut dot = C::zero();
            for (r, x) in row.iter().zip(&w) {
                if !r.is_zero() && !x.is_zero() {
                    dot += (*r).clone() * x.clone();
                }
            }
            v.push(-dot);
            if j < k {
                let mut nw = vec![C::zero(); a];
                for (i, ni) in nw.iter_mut().enumerate() {
                    for (j2, x) in w.iter().enumerate() {
                        let e = m.get(i, j2);
                        if !e.is_zero() && !x.is_zero() {
                            *ni += e.clone() * x.clone();
                        }
                    }
                }
                w = nw;
            }
        }
        let mut pn = vec![C::zero(); k + 1];
        for (i, out) in pn.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate() {
                if i >= j && i - j < v.len() && !pj.is_zero() {
                    let vi = &v[i - j];
                    if !vi.is_zero() {
                        *out += vi.clone() * pj.clone();
                    }
                }
            }
        }
        p = pn;
    }
    p.reverse();
    Poly::new(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, IntPoly};
    use proptest::prelude::*;

    fn im(rows: Vec<Vec<i64>>) -> Mat<i64> {
        Mat::from_rows(rows)
    }

    #[test]
    fn identity_and_multiplication() {
        let id = Mat::<i64>::identity(3);
        assert!(id.is_identity());
        let m = im(vec![vec![1, 2, 0], vec![0, 1, -1], vec![3, 0, 1]]);
        assert_eq!(m.mul(&id), m);
        assert_eq!(id.mul(&m), m);
        let m2 = m.mul(&m);
        let expected = im(vec![vec![1, 4, -2], vec![-3, 1, -2], vec![6, 6, 1]]);
        assert_eq!(m2, expected);
    }

    #[test]
    fn block_diag_assembles() {
        let a = im(vec![vec![2]]);
        let b = im(vec![vec![0, 1], vec![1, 0]]);
        let d = Mat::block_diag(&[a, b]);
        assert_eq!(d.size(), 3);
        assert_eq!(*d.get(0, 0), 2);
        assert_eq!(*d.get(1, 2), 1);
        assert_eq!(*d.get(0, 1), 0);
    }

    #[test]
    fn charpoly_small_cases() {
        assert_eq!(charpoly(&Mat::<i64>::identity(0)), Poly::one());
        assert_eq!(charpoly(&im(vec![vec![-1]])), Poly::from_ints(&[1, 1]));
        assert_eq!(
            charpoly(&im(vec![vec![1, 0], vec![0, 1]])),
            Poly::from_ints(&[1, -2, 1])
        );
        // companion-style swap: eigenvalues ±1
        assert_eq!(
            charpoly(&im(vec![vec![0, 1], vec![1, 0]])),
            Poly::from_ints(&[-1, 0, 1])
        );
        // 90° rotation: t² + 1
        assert_eq!(
            charpoly(&im(vec![vec![0, -1], vec![1, 0]])),
            Poly::from_ints(&[1, 0, 1])
        );
        // generic 2×2: t² − (a+d)t + (ad − bc)
        assert_eq!(
            charpoly(&im(vec![vec![3, 7], vec![2, 5]])),
            Poly::from_ints(&[1, -8, 1])
        );
    }

    #[test]
    fn charpoly_known_3x3() {
        // Companion matrix of t³ − 2t² + 3t − 5.
        let c = im(vec![vec![0, 0, 5], vec![1, 0, -3], vec![0, 1, 2]]);
        assert_eq!(charpoly(&c), Poly::from_ints(&[-5, 3, -2, 1]));
    }

    #[test]
    fn charpoly_over_bigint() {
        let m = Mat::from_rows(vec![
            vec![Int::from(10_000_000_000i64), Int::from(1)],
            vec![Int::from(-1), Int::from(10_000_000_000i64)],
        ]);
        let chi = charpoly(&m);
        let t2 = Int::from(20_000_000_000i64);
        let det = Int::from(10_000_000_000i64) * Int::from(10_000_000_000i64) + 1;
        assert_eq!(chi, Poly::new(vec![det, -t2, Int::from(1)]));
    }

    fn det_by_leibniz(m: &Mat<i64>) -> i64 {
        // Signed permutation expansion; fine at the n ≤ 4 used in tests.
        fn perms(n: usize) -> Vec<(Vec<usize>, i64)> {
            if n == 1 {
                return vec![(vec![0], 1)];
            }
            let mut out = Vec::new();
            for (p, sign) in perms(n - 1) {
                for slot in 0..n {
                    let mut q: Vec<usize> = p.iter().map(|&x| x + usize::from(x >= slot)).collect();
                    q.insert(0, slot);
                    // prepending value `slot` creates `slot` new inversions
                    let s = if slot % 2 == 0 { sign } else { -sign };
                    out.push((q, s));
                }
            }
            out
        }
        let n = m.size();
        let mut det = 0;
        for (p, sign) in perms(n) {
            let mut prod = sign;
            for (i, &pi) in p.iter().enumerate() {
                prod *= m.get(i, pi);
            }
            det += prod;
        }
        det
    }

    proptest! {
        #[test]
        fn charpoly_constant_term_is_signed_det(
            entries in proptest::collection::vec(-3i64..4, 16)) {
            let m = Mat::from_flat(4, entries);
            let chi = charpoly(&m);
            // χ(0) = det(−M) = (−1)⁴ det(M)
            prop_assert_eq!(chi.coeff(0), det_by_leibniz(&m));
        }

        #[test]
        fn charpoly_trace_and_monic(entries in proptest::collection::vec(-4i64..5, 9)) {
            let m = Mat::from_flat(3, entries);
            let chi = charpoly(&m);
            prop_assert_eq!(chi.degree(), Some(3));
            prop_assert_eq!(chi.coeff(3), 1);
            let trace = m.get(0, 0) + m.get(1, 1) + m.get(2, 2);
            prop_assert_eq!(chi.coeff(2), -trace);
        }

        #[test]
        fn cayley_hamilton(entries in proptest::collection::vec(-3i64..4, 9)) {
            // χ(M) = 0, evaluated with exact integer matrix powers.
            let m = Mat::from_flat(3, entries.clone());
            let big = m.map(|&x| Int::from(x));
            let chi = charpoly(&big);
            let mut acc = Mat::from_flat(3, vec![Int::from(0); 9]);
            for (k, c) in chi.coeffs().iter().enumerate() {
                let term = big.pow(k).map(|x| x.clone() * c.clone());
                let mut data = Vec::with_capacity(9);
                for (a, b) in acc.data().iter().zip(term.data()) {
                    data.push(a.clone() + b.clone());
                }
                acc = Mat::from_flat(3, data);
            }
            prop_assert!(acc.data().iter().all(|x| x == &Int::from(0)));
        }
    }

    #[test]
    fn charpoly_matches_cofactor_on_permutation_like() {
        // Signed permutation with a 3-cycle and a sign flip:
        // eigenvalues are cube roots of unity and −1.
        let m = im(vec![
            vec![0, 0, 1, 0],
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, -1],
        ]);
        let expect: IntPoly =
            Poly::from_ints(&[-1, 0, 0, 1]) * Poly::from_ints(&[1, 1]);
        assert_eq!(charpoly(&m.map(|&x| Int::from(x))), expect);
    }
}
