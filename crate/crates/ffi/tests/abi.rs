use std::ffi::{CStr, CString};
use std::ptr;

use secdom_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(sd_last_error()) }.to_string_lossy().into_owned()
}

fn graph_from_edges(n: usize, edges: &[(u32, u32)]) -> *mut SdGraph {
    let flat: Vec<u32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut g = ptr::null_mut();
    let st = unsafe { sd_graph_new(n, flat.as_ptr(), edges.len(), &mut g) };
    assert_eq!(st, SdStatus::Ok, "{}", last_error());
    g
}

#[test]
fn triangle_round_trip() {
    let g = graph_from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
    unsafe {
        assert_eq!(sd_graph_vertex_count(g), 3);
        assert_eq!(sd_graph_edge_count(g), 3);
        let mut s = ptr::null_mut();
        assert_eq!(sd_graph_to_graph6(g, &mut s), SdStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "Bw");
        let mut h = ptr::null_mut();
        assert_eq!(sd_graph_from_graph6(s, &mut h), SdStatus::Ok);
        assert_eq!(sd_graph_edge_count(h), 3);
        sd_string_free(s);
        sd_graph_free(h);

        let mut value = 0usize;
        let mut set = 0u64;
        assert_eq!(sd_gamma_s(g, &mut value, &mut set), SdStatus::Ok);
        assert_eq!((value, set), (1, 0b1));
        let mut ok = false;
        assert_eq!(sd_is_secure_dominating(g, 0b1, &mut ok), SdStatus::Ok);
        assert!(ok);
        assert_eq!(sd_is_outerplanar(g, &mut ok), SdStatus::Ok);
        assert!(ok);
        sd_graph_free(g);
    }
}

#[test]
fn edge_list_input() {
    let text = CString::new("4 3\n0 1\n1 2\n2 3\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(sd_graph_from_edge_list(text.as_ptr(), &mut g), SdStatus::Ok);
        let mut value = 0usize;
        assert_eq!(sd_gamma(g, &mut value, ptr::null_mut()), SdStatus::Ok);
        assert_eq!(value, 2);
        let mut dom = true;
        assert_eq!(sd_is_dominating(g, 0b0001, &mut dom), SdStatus::Ok);
        assert!(!dom);
        sd_graph_free(g);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    let bad = CString::new("3 1\n0 5\n").unwrap();
    unsafe {
        assert_eq!(sd_graph_from_edge_list(bad.as_ptr(), &mut g), SdStatus::ParseError);
        assert!(last_error().contains("line"));
        let bad6 = CString::new("B~~").unwrap();
        assert_eq!(sd_graph_from_graph6(bad6.as_ptr(), &mut g), SdStatus::ParseError);
        assert_eq!(sd_graph_new(65, ptr::null(), 0, &mut g), SdStatus::TooLarge);
        let loops = [1u32, 1];
        assert_eq!(sd_graph_new(3, loops.as_ptr(), 1, &mut g), SdStatus::InvalidArgument);
        assert_eq!(sd_graph_new(3, ptr::null(), 1, &mut g), SdStatus::NullPointer);
        assert_eq!(sd_build_extremal(1, &mut g), SdStatus::InvalidArgument);
        assert!(g.is_null());

        let k3 = graph_from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let mut ok = false;
        assert_eq!(sd_is_dominating(k3, 1 << 7, &mut ok), SdStatus::VertexOutOfRange);
        assert_eq!(sd_is_outerplanar(k3, ptr::null_mut()), SdStatus::NullPointer);
        let mut p = SdPartitionProfile::default();
        assert_eq!(sd_partition_profile(k3, 0, &mut p), SdStatus::NotSecure);
        sd_graph_free(k3);

        let k4 = graph_from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(sd_partition_profile(k4, 0b1, &mut p), SdStatus::NotOuterplanarInput);
        sd_graph_free(k4);

        assert_eq!(sd_graph_vertex_count(ptr::null()), 0);
        sd_graph_free(ptr::null_mut());
        sd_string_free(ptr::null_mut());
    }
}

#[test]
fn extremal_graph() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(sd_build_extremal(2, &mut g), SdStatus::Ok);
        assert_eq!(sd_graph_vertex_count(g), 11);
        assert_eq!(sd_graph_edge_count(g), 14);
        let mut value = 0usize;
        let mut set = 0u64;
        assert_eq!(sd_gamma_s(g, &mut value, &mut set), SdStatus::Ok);
        assert_eq!(value, 3);

        let mut js = ptr::null_mut();
        assert_eq!(sd_detect_extremal(g, &mut js), SdStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(js).to_str().unwrap()).unwrap();
        assert_eq!(v["k"], 2);
        sd_string_free(js);

        let mut p = SdPartitionProfile::default();
        assert_eq!(sd_partition_profile(g, 0b111, &mut p), SdStatus::Ok);
        assert_eq!((p.x, p.y, p.x2), (3, 8, 2));
        assert_eq!(p.y, 2 * p.x2 + p.x1 + p.c);
        sd_graph_free(g);

        let path = graph_from_edges(11, &(0..10).map(|i| (i, i + 1)).collect::<Vec<_>>());
        let mut js = ptr::null_mut();
        assert_eq!(sd_detect_extremal(path, &mut js), SdStatus::Ok);
        assert_eq!(CStr::from_ptr(js).to_str().unwrap(), "null");
        sd_string_free(js);
        sd_graph_free(path);
    }
}

#[test]
fn errors_are_per_thread() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(sd_build_extremal(0, &mut g), SdStatus::InvalidArgument);
    }
    assert!(!last_error().is_empty());
    std::thread::spawn(|| assert!(last_error().is_empty()))
        .join()
        .unwrap();
}

#[test]
fn header_lists_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/secdom.h")).unwrap();
    for name in [
        "sd_last_error",
        "sd_graph_new",
        "sd_graph_from_graph6",
        "sd_graph_from_edge_list",
        "sd_graph_free",
        "sd_graph_vertex_count",
        "sd_graph_edge_count",
        "sd_graph_to_graph6",
        "sd_string_free",
        "sd_is_dominating",
        "sd_is_secure_dominating",
        "sd_gamma",
        "sd_gamma_s",
        "sd_is_outerplanar",
        "sd_build_extremal",
        "sd_detect_extremal",
        "sd_partition_profile",
        "sd_version",
        "typedef struct SdGraph SdGraph",
        "SD_STATUS_PANIC = 99",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
    let v = unsafe { CStr::from_ptr(sd_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
