//! Minimal deterministic fan-out helper.
//!
//! Work items are independent; results are collected by index, so the
//! output does not depend on scheduling. With `threads <= 1` everything
//! runs inline on the caller's thread.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

pub fn run_indexed<T, F>(threads: usize, count: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    if threads <= 1 || count <= 1 {
        return (0..count).map(&work).collect();
    }
    let slots: Mutex<Vec<Option<T>>> = Mutex::new((0..count).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    let workers = threads.min(count);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= count {
                    break;
                }
                let value = work(idx);
                slots.lock().unwrap()[idx] = Some(value);
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|slot| slot.expect("every index filled"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn results_keep_index_order() {
        let inline = run_indexed(1, 17, |i| i * i);
        let threaded = run_indexed(4, 17, |i| i * i);
        assert_eq!(inline, threaded);
        assert_eq!(inline[16], 256);
    }
}
