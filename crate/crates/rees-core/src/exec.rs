//! Thin indirection over rayon so every data-parallel loop in the crate has
//! a sequential fallback when the `parallel` feature is disabled. Callers
//! control the degree of parallelism by installing a rayon thread pool (a
//! one-thread pool gives sequential execution at runtime).

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Order-preserving map over owned items.
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Run two closures, concurrently when possible.
pub fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    #[cfg(feature = "parallel")]
    {
        rayon::join(a, b)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (a(), b())
    }
}

/// Run four closures, concurrently when possible.
pub fn join4<F1, F2, F3, F4, R1, R2, R3, R4>(f1: F1, f2: F2, f3: F3, f4: F4) -> (R1, R2, R3, R4)
where
    F1: FnOnce() -> R1 + Send,
    F2: FnOnce() -> R2 + Send,
    F3: FnOnce() -> R3 + Send,
    F4: FnOnce() -> R4 + Send,
    R1: Send,
    R2: Send,
    R3: Send,
    R4: Send,
{
    let ((r1, r2), (r3, r4)) = join(|| join(f1, f2), || join(f3, f4));
    (r1, r2, r3, r4)
}
