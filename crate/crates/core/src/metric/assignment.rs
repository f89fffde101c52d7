use num_traits::Zero;
use std::ops::{Add, Sub};

/// Minimum cost assignment of `rows` rows to distinct columns (`rows <= cols`),
/// Hungarian method with potentials. Returns the total cost and, for every
/// row, its column.
pub fn min_cost_assignment<T, F>(rows: usize, cols: usize, cost: F) -> (T, Vec<usize>)
where
    T: Copy + Ord + Zero + Add<Output = T> + Sub<Output = T>,
    F: Fn(usize, usize) -> T,
{
    assert!(rows <= cols, "assignment needs rows <= cols");
    if rows == 0 {
        return (T::zero(), Vec::new());
    }
    // 1-based bookkeeping; column 0 is the virtual start column.
    let mut u = vec![T::zero(); rows + 1];
    let mut v = vec![T::zero(); cols + 1];
    let mut owner = vec![0usize; cols + 1];
    let mut way = vec![0usize; cols + 1];
    for i in 1..=rows {
        owner[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<T>> = vec![None; cols + 1];
        let mut used = vec![false; cols + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta: Option<T> = None;
            let mut j1 = 0;
            for j in 1..=cols {
                if used[j] {
                    continue;
                }
                let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if minv[j].is_none_or(|m| cur < m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].expect("scanned");
                if delta.is_none_or(|d| mj < d) {
                    delta = Some(mj);
                    j1 = j;
                }
            }
            let delta = delta.expect("a free column exists while rows <= cols");
            for j in 0..=cols {
                if used[j] {
                    u[owner[j]] = u[owner[j]] + delta;
                    v[j] = v[j] - delta;
                } else if let Some(m) = minv[j] {
                    minv[j] = Some(m - delta);
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0; rows];
    for j in 1..=cols {
        if owner[j] != 0 {
            assign[owner[j] - 1] = j - 1;
        }
    }
    let total = assign
        .iter()
        .enumerate()
        .fold(T::zero(), |acc, (i, &j)| acc + cost(i, j));
    (total, assign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangular() {
        let m = [[4i64, 1, 3], [2, 0, 5]];
        let (c, a) = min_cost_assignment(2, 3, |i, j| m[i][j]);
        assert_eq!(c, 3);
        assert_ne!(a[0], a[1]);
    }

    #[test]
    fn empty() {
        let (c, a) = min_cost_assignment(0, 4, |_, _| 1i64);
        assert_eq!(c, 0);
        assert!(a.is_empty());
    }
}
