//! Fraction-free (Bareiss) elimination over Laurent polynomial rings.

use super::{gcd_many, LaurentPoly};

/// Row echelon form produced by fraction-free elimination.
///
/// Every entry of the reduced matrix is a minor of the input, so the pivots
/// stay polynomial and the last pivot is the determinant of the pivot block.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<LaurentPoly>>,
    pub pivots: Vec<usize>,
    /// Parity of the row swaps performed.
    pub swaps_odd: bool,
}

impl Echelon {
    pub fn new(mut m: Vec<Vec<LaurentPoly>>) -> Self {
        let nrows = m.len();
        let ncols = m.first().map_or(0, |r| r.len());
        let mut prev = LaurentPoly::one();
        let mut row = 0;
        let mut pivots = Vec::new();
        let mut swaps_odd = false;
        for col in 0..ncols {
            if row == nrows {
                break;
            }
            let best = (row..nrows)
                .filter(|&r| !m[r][col].is_zero())
                .min_by_key(|&r| m[r][col].num_terms());
            let Some(p) = best else { continue };
            if p != row {
                m.swap(p, row);
                swaps_odd = !swaps_odd;
            }
            let (top, rest) = m.split_at_mut(row + 1);
            let pivot_row = &top[row];
            let piv = pivot_row[col].clone();
            for r in rest.iter_mut() {
                let lead = r[col].clone();
                for j in col + 1..ncols {
                    let v = &(&piv * &r[j]) - &(&lead * &pivot_row[j]);
                    r[j] = if prev.is_one() {
                        v
                    } else {
                        v.div_exact(&prev).expect("Bareiss division is exact")
                    };
                }
                r[col] = LaurentPoly::zero();
            }
            prev = piv;
            pivots.push(col);
            row += 1;
        }
        Echelon {
            rows: m,
            pivots,
            swaps_odd,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Determinant of a square matrix.
pub fn determinant(m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let ech = Echelon::new(m);
    if ech.rank() < n {
        return LaurentPoly::zero();
    }
    let d = ech.rows[n - 1][n - 1].clone();
    if ech.swaps_odd {
        -d
    } else {
        d
    }
}

/// Basis of the right kernel with polynomial entries, one vector per free
/// column, each with its common content removed.
pub fn nullspace(m: Vec<Vec<LaurentPoly>>) -> Vec<Vec<LaurentPoly>> {
    let ncols = m.first().map_or(0, |r| r.len());
    let ech = Echelon::new(m);
    let r = ech.rank();
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    let scale = if r == 0 {
        LaurentPoly::one()
    } else {
        ech.rows[r - 1][ech.pivots[r - 1]].clone()
    };
    let mut basis = Vec::new();
    for &f in &free {
        let mut x = vec![LaurentPoly::zero(); ncols];
        x[f] = scale.clone();
        for i in (0..r).rev() {
            let row = &ech.rows[i];
            let mut acc = LaurentPoly::zero();
            for (j, xj) in x.iter().enumerate().skip(ech.pivots[i] + 1) {
                if !xj.is_zero() && !row[j].is_zero() {
                    acc = acc + &row[j] * xj;
                }
            }
            x[ech.pivots[i]] = (-acc)
                .div_exact(&row[ech.pivots[i]])
                .expect("kernel back substitution is exact");
        }
        let c = gcd_many(x.iter());
        if !c.is_one() && !c.is_zero() {
            for e in x.iter_mut() {
                *e = e.div_exact(&c).unwrap();
            }
        }
        basis.push(x);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: i64) -> LaurentPoly {
        LaurentPoly::from_int(n)
    }

    #[test]
    fn integer_determinant() {
        let m = vec![
            vec![p(2), p(0), p(1)],
            vec![p(1), p(3), p(2)],
            vec![p(1), p(1), p(2)],
        ];
        assert_eq!(determinant(m), p(6));
        let swap = vec![vec![p(0), p(1)], vec![p(1), p(0)]];
        assert_eq!(determinant(swap), p(-1));
    }

    #[test]
    fn vandermonde() {
        let x = LaurentPoly::var("x");
        let y = LaurentPoly::var("y");
        let z = LaurentPoly::var("z");
        let row = |v: &LaurentPoly| vec![p(1), v.clone(), v.pow(2)];
        let d = determinant(vec![row(&x), row(&y), row(&z)]);
        assert_eq!(d, (&y - &x) * (&z - &x) * (&z - &y));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let q = LaurentPoly::var("q");
        let m = vec![
            vec![q.clone(), p(1), &q + &p(1), p(0)],
            vec![p(1), q.clone(), p(2), &q * &q],
        ];
        let ker = nullspace(m.clone());
        assert_eq!(ker.len(), 2);
        for v in ker {
            for row in &m {
                let s = row
                    .iter()
                    .zip(&v)
                    .fold(LaurentPoly::zero(), |a, (x, y)| a + x * y);
                assert!(s.is_zero());
            }
        }
    }
}
