//! Cached records equal fresh computations.

use csh::cache::{cache_key, Cache};
use csh::graph::builtin;
use csh::scan::{full_homology, scan_graph, ScanOptions, DEFAULT_BUDGET};

#[test]
fn cached_records_equal_fresh() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    for name in ["K3", "K4", "C5", "star5", "G1", "G6", "K33"] {
        let g = builtin(name).unwrap();
        let fresh = scan_graph(&g, &ScanOptions::default(), None).unwrap();
        let first = scan_graph(&g, &ScanOptions::default(), Some(&cache)).unwrap();
        let again = scan_graph(&g, &ScanOptions::default(), Some(&cache)).unwrap();
        assert_eq!(fresh, first, "{name}");
        assert_eq!(fresh, again, "{name}");
        let key = cache_key("scan", "p2-i1", &g);
        assert!(cache.get::<serde_json::Value>(&key).is_some(), "{name}");
    }
    for name in ["K3", "C4", "star4"] {
        let g = builtin(name).unwrap();
        let fresh = full_homology(&g, DEFAULT_BUDGET, None).unwrap();
        let _ = full_homology(&g, DEFAULT_BUDGET, Some(&cache)).unwrap();
        let cached = full_homology(&g, DEFAULT_BUDGET, Some(&cache)).unwrap();
        assert_eq!(fresh, cached, "{name}");
        let a = serde_json::to_vec(&fresh).unwrap();
        let b = serde_json::to_vec(&cached).unwrap();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn stale_key_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let g = builtin("K3").unwrap();
    let key = cache_key("scan", "p2-i1", &g);
    cache.put(&key, &1u32).unwrap();
    // A record of the wrong type does not deserialize and is recomputed.
    let rec = scan_graph(&g, &ScanOptions::default(), Some(&cache)).unwrap();
    assert_eq!(rec, scan_graph(&g, &ScanOptions::default(), None).unwrap());
}
