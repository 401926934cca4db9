//! Sequential / data-parallel execution switch.
//!
//! With the `parallel` feature disabled, [`Exec::Parallel`] runs on the
//! calling thread. Results never depend on the choice.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// First `Some` of `f` over `items` in slice order.
    pub fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().find_map_first(f);
        }
        items.iter().find_map(f)
    }

    /// Sum of `f(i)` for `i` in `0..count`.
    pub fn sum_indexed<F>(self, count: u64, f: F) -> u64
    where
        F: Fn(u64) -> u64 + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return (0..count).into_par_iter().map(f).sum();
        }
        (0..count).map(f).sum()
    }

    /// First pair `(i, j)`, `i < j`, in lexicographic order with `pred(i, j)`.
    pub fn first_pair<F>(self, len: usize, pred: F) -> Option<(usize, usize)>
    where
        F: Fn(usize, usize) -> bool + Sync + Send,
    {
        let rows: Vec<usize> = (0..len).collect();
        self.find_map_first(&rows, |&i| {
            (i + 1..len).find(|&j| pred(i, j)).map(|j| (i, j))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u32> = (0..1000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(
                exec.find_map_first(&items, |&x| (x % 97 == 96).then_some(x)),
                Some(96)
            );
            assert_eq!(exec.sum_indexed(100, |i| i), 4950);
            assert_eq!(exec.first_pair(10, |i, j| i + j == 9 && i > 2), Some((3, 6)));
        }
    }
}
