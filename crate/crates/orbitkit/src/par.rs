//! Data-parallel map with a sequential fallback, so the verification
//! sweeps can fan out per orbit. Work items share nothing.

#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential map, kept for benchmarking against `par_map`.
pub fn seq_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_agree() {
        let items: Vec<u64> = (0..100).collect();
        let sq = |x: u64| x * x;
        assert_eq!(par_map(items.clone(), sq), seq_map(items, sq));
    }
}
