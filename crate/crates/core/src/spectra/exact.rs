use num_bigint::BigInt;

/// Exact rank of an integer matrix by Bareiss fraction-free elimination.
pub(crate) fn integer_rank(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != zero) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let num = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = zero.clone();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Whether `k` is a root of the characteristic polynomial of the integer
/// matrix `m`, i.e. `det(m - kI) = 0`, decided in exact arithmetic.
pub(crate) fn is_integer_eigenvalue(m: &[Vec<i64>], k: i64) -> bool {
    let shifted: Vec<Vec<i64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, &x)| if i == j { x - k } else { x }).collect())
        .collect();
    integer_rank(&shifted) < m.len()
}
