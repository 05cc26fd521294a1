//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

/// Rank of `rows` (all rows must have the same length).
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    debug_assert!(m.iter().all(|r| r.len() == n_cols));

    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(p) = (rank..n_rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        for r in (rank + 1)..n_rows {
            let factor = m[r][col];
            for c in col..n_cols {
                // exact: Bareiss guarantees divisibility by the previous pivot
                m[r][c] = (pivot * m[r][c] - factor * m[rank][c]) / prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}
