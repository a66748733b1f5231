//! Helpers shared by the integration tests. The arithmetic here is written
//! independently of the library so it can serve as an oracle.
#![allow(dead_code)]

use std::io::Write;

use lpstlab::graph::{blow_up, Graph};
use lpstlab::spectra::{laplacian_spectrum, SpectralData};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_of(values: impl IntoIterator<Item = i64>) -> i64 {
    values.into_iter().fold(0, gcd)
}

/// 2-adic valuation by repeated halving; `None` for zero.
pub fn two_adic(mut x: i64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let mut v = 0;
    while x % 2 == 0 {
        x /= 2;
        v += 1;
    }
    Some(v)
}

pub fn spectrum(g: &Graph) -> SpectralData {
    laplacian_spectrum(g).expect("decomposition converges")
}

pub fn blown_spectrum(g: &Graph, n: usize) -> SpectralData {
    spectrum(&blow_up(g, n).expect("valid blow-up"))
}

/// One line per acceptance criterion, written past the test harness's
/// output capture so it always shows up in the log.
pub fn report(id: u32, title: &str, failures: &[String]) {
    let mut err = std::io::stderr().lock();
    if failures.is_empty() {
        let _ = writeln!(err, "PASS criterion {id:>2}: {title}");
    } else {
        let shown: Vec<&str> = failures.iter().take(6).map(String::as_str).collect();
        let more = if failures.len() > 6 { format!(" (+{} more)", failures.len() - 6) } else { String::new() };
        let _ = writeln!(err, "FAIL criterion {id:>2}: {title}: {}{more}", shown.join("; "));
    }
}

pub fn finish(id: u32, title: &str, failures: Vec<String>) {
    report(id, title, &failures);
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
}
