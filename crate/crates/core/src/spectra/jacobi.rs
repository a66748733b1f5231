use nalgebra::DMatrix;

/// Cyclic Jacobi eigensolver for a real symmetric matrix.
///
/// Returns the (unsorted) eigenvalues and the orthogonal matrix whose columns
/// are the matching eigenvectors, or `None` if the off-diagonal mass has not
/// dropped below `1e-15·‖A‖_F` after `max_sweeps` sweeps.
pub(crate) fn symmetric_eigen(a: &DMatrix<f64>, max_sweeps: usize) -> Option<(Vec<f64>, DMatrix<f64>)> {
    let n = a.nrows();
    // row-major scratch copy; nalgebra is column-major but A is symmetric
    let mut m: Vec<f64> = a.iter().copied().collect();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = a.norm();
    let target = (1e-15 * scale).max(f64::MIN_POSITIVE);

    for _ in 0..=max_sweeps {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| 2.0 * m[p * n + q] * m[p * n + q])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            let values = (0..n).map(|i| m[i * n + i]).collect();
            return Some((values, DMatrix::from_row_slice(n, n, &v)));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (m[k * n + p], m[k * n + q]);
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (m[p * n + k], m[q * n + k]);
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstructs_random_symmetric() {
        let n = 7;
        let mut a = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let x = ((i * 31 + j * 17) % 13) as f64 - 6.0;
                a[(i, j)] = x;
                a[(j, i)] = x;
            }
        }
        let (vals, vecs) = symmetric_eigen(&a, 100).unwrap();
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vals.clone()));
        let back = &vecs * d * vecs.transpose();
        assert!((back - &a).amax() < 1e-12);
        assert!((vecs.transpose() * &vecs - DMatrix::identity(n, n)).amax() < 1e-12);

        let mut ours = vals;
        ours.sort_by(f64::total_cmp);
        let mut oracle: Vec<f64> = nalgebra::SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
        oracle.sort_by(f64::total_cmp);
        for (x, y) in ours.iter().zip(&oracle) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn diagonal_and_one_by_one() {
        let (vals, _) = symmetric_eigen(&DMatrix::from_element(1, 1, 4.0), 10).unwrap();
        assert_eq!(vals, vec![4.0]);
        let (vals, _) = symmetric_eigen(&DMatrix::zeros(3, 3), 10).unwrap();
        assert_eq!(vals, vec![0.0; 3]);
    }
}
