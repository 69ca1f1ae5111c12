use crate::error::{Error, Result};
use crate::polygon::{ordered, Polygon, Triangulation};

/// Length of the axis `(0, l)` crossed by every diagonal of the family member.
pub fn family_axis_length(n: usize, k: usize) -> usize {
    let d = n - 3 - k;
    (n - 3).div_ceil(d) + 1
}

/// A triangulation of the standard `n`-gon with comb gap exactly `k` and
/// eccentricity at most `n - 4 + k`, for `n/2 - 2 < k <= n - 5`.
///
/// Every diagonal crosses `{0, l}`. The diagonals form a staircase starting
/// at `{l-1, l+1}`: left vertices take `n - 3 - k` diagonals each, from `l - 1`
/// downwards, the last one taking what remains.
pub fn eccentric_family(n: usize, k: usize) -> Result<Triangulation> {
    if n < 5 || 2 * k + 4 <= n || k + 5 > n {
        return Err(Error::Precondition(format!(
            "the family needs n/2 - 2 < k <= n - 5, got n={n}, k={k}"
        )));
    }
    let polygon = Polygon::standard(n)?;
    let d = n - 3 - k;
    let l = family_axis_length(n, k);
    let mut left = l - 1;
    let mut right = l + 1;
    let mut remaining = n - 3;
    let mut diagonals = Vec::with_capacity(n - 3);
    while remaining > 0 {
        let take = d.min(remaining);
        for step in 0..take {
            if step > 0 {
                right += 1;
            }
            diagonals.push(ordered(left, right));
        }
        remaining -= take;
        if remaining > 0 {
            left -= 1;
        }
    }
    if left != 1 || right != n - 1 {
        return Err(Error::Internal(format!(
            "staircase for n={n}, k={k} ended at {{{left},{right}}}"
        )));
    }
    diagonals.sort_unstable();
    Ok(Triangulation::from_positions(polygon, diagonals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::metrics::eccentricity;
    use crate::polygon::{validate_triangulation, Edge};

    #[test]
    fn examples() {
        let t = eccentric_family(10, 5).unwrap();
        assert_eq!(family_axis_length(10, 5), 5);
        assert_eq!(t.max_interior_degree(), 2);
        assert_eq!(family_axis_length(10, 4), 4);
        assert_eq!(eccentric_family(10, 4).unwrap().max_interior_degree(), 3);
        assert_eq!(eccentric_family(8, 3).unwrap().max_interior_degree(), 2);
        assert!(matches!(
            eccentric_family(10, 3),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            eccentric_family(10, 6),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn shape() {
        for n in 6..=30 {
            for k in 0..=n - 5 {
                if 2 * k + 4 <= n {
                    continue;
                }
                let t = eccentric_family(n, k).unwrap();
                assert!(validate_triangulation(t.polygon(), t.diagonals()).is_ok());
                assert_eq!(t.comb_gap(), k, "n={n} k={k}");
                let l = family_axis_length(n, k) as u32;
                assert!(3 <= l && 2 * l as usize <= n);
                let axis = Edge::new(0, l);
                for e in t.diagonals() {
                    assert!(crate::polygon::crossing(t.polygon(), e, axis).unwrap());
                }
                let d = n - 3 - k;
                assert_eq!(t.interior_degree(l - 1).unwrap(), d);
                assert_eq!(t.interior_degree(l - 2).unwrap(), d);
            }
        }
    }

    #[test]
    fn eccentricity_bound() {
        let budget = Budget::default();
        for n in 8..=10 {
            for k in 0..=n - 5 {
                if 2 * k + 4 <= n {
                    continue;
                }
                let t = eccentric_family(n, k).unwrap();
                let e = eccentricity(&t, &budget).unwrap().eccentricity;
                assert!(e <= n - 4 + k, "n={n} k={k} ecc={e}");
            }
        }
    }
}
