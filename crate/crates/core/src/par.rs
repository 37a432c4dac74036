//! Execution strategy for the data-parallel loops in census and claim checking.
//!
//! Every parallel site funnels through [`map_vec`], which preserves input
//! order, so results are identical bytes regardless of strategy or worker
//! count. With the `parallel` feature disabled all strategies degrade to the
//! sequential path.

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parallelism {
    Sequential,
    /// Rayon's global pool (available parallelism).
    Auto,
    /// A dedicated pool with exactly this many threads.
    Threads(usize),
}

impl Default for Parallelism {
    fn default() -> Self {
        Parallelism::Auto
    }
}

#[cfg(feature = "parallel")]
pub fn map_vec<T, R, F>(par: Parallelism, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match par {
        Parallelism::Sequential => items.into_iter().map(f).collect(),
        Parallelism::Auto => items.into_par_iter().map(f).collect(),
        Parallelism::Threads(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .expect("thread pool");
            pool.install(|| items.into_par_iter().map(f).collect())
        }
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_vec<T, R, F>(_par: Parallelism, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u32> = (0..1000).collect();
        let seq = map_vec(Parallelism::Sequential, items.clone(), |x| x * 3);
        let par = map_vec(Parallelism::Auto, items.clone(), |x| x * 3);
        let two = map_vec(Parallelism::Threads(2), items, |x| x * 3);
        assert_eq!(seq, par);
        assert_eq!(seq, two);
    }
}
