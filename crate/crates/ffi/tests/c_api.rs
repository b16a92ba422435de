use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use orientcount_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { oc_string_free(s) };
    owned
}

fn graph(code: &str) -> *mut OcGraph {
    let c = CString::new(code).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { oc_graph_from_graph6(c.as_ptr(), &mut g) }, OcStatus::Ok);
    g
}

fn family(name: &str) -> *mut OcFamily {
    let c = CString::new(name).unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { oc_family_parse(c.as_ptr(), &mut f) }, OcStatus::Ok);
    f
}

#[test]
fn counts_through_handles() {
    let g = graph("C~");
    let f = family("s4");
    unsafe {
        assert_eq!(oc_graph_order(g), 4);
        assert_eq!(oc_graph_edge_count(g), 6);
        let mut s = ptr::null_mut();
        assert_eq!(oc_count(g, f, &mut s), OcStatus::Ok);
        assert_eq!(take(s), "40");
        let mut d = 0u64;
        assert_eq!(oc_count_u64(g, f, &mut d), OcStatus::Ok);
        assert_eq!(d, 40);
        let naive = CString::new("naive").unwrap();
        assert_eq!(oc_count_with_method(g, f, naive.as_ptr(), &mut s), OcStatus::Ok);
        assert_eq!(take(s), "40");
        oc_graph_free(g);
        oc_family_free(f);
    }
}

#[test]
fn builds_multipartite_and_turan_graphs() {
    unsafe {
        let sizes = [2usize, 1, 1];
        let mut g = ptr::null_mut();
        assert_eq!(oc_graph_from_parts(sizes.as_ptr(), sizes.len(), &mut g), OcStatus::Ok);
        let mut flag = false;
        assert_eq!(oc_graph_is_complete_multipartite(g, &mut flag), OcStatus::Ok);
        assert!(flag);
        let mut t = ptr::null_mut();
        assert_eq!(oc_graph_turan(4, 3, &mut t), OcStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(oc_graph_canonical(g, &mut a), OcStatus::Ok);
        assert_eq!(oc_graph_canonical(t, &mut b), OcStatus::Ok);
        let (mut sa, mut sb) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(oc_graph_to_graph6(a, &mut sa), OcStatus::Ok);
        assert_eq!(oc_graph_to_graph6(b, &mut sb), OcStatus::Ok);
        assert_eq!(take(sa), take(sb));
        let mut e = 0u64;
        assert_eq!(oc_turan_edges(9, 3, &mut e), OcStatus::Ok);
        assert_eq!(e, 27);
        assert_eq!(oc_sc_count(5, &mut e), OcStatus::Ok);
        assert_eq!(e, 544);
        for h in [g, t, a, b] {
            oc_graph_free(h);
        }
    }
}

#[test]
fn reports_errors_with_messages() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("B").unwrap();
        assert_eq!(oc_graph_from_graph6(bad.as_ptr(), &mut g), OcStatus::Parse);
        assert!(g.is_null());
        assert!(!CStr::from_ptr(oc_last_error()).to_bytes().is_empty());
        let mut f = ptr::null_mut();
        let name = CString::new("s99").unwrap();
        assert_ne!(oc_family_parse(name.as_ptr(), &mut f), OcStatus::Ok);
        let mut e = 0u64;
        assert_eq!(oc_turan_edges(5, 0, &mut e), OcStatus::InvalidArgument);
        // K12 has 66 edges, past the exhaustive counting budget.
        let k12 = graph(&format!("K{}", "~".repeat(11)));
        let c3 = family("c3");
        assert_eq!(oc_count_u64(k12, c3, &mut e), OcStatus::Budget);
        assert!(CStr::from_ptr(oc_last_error()).to_str().unwrap().contains("budget"));
        oc_graph_free(k12);
        oc_family_free(c3);
    }
}

#[test]
fn search_returns_json() {
    let f = family("u4");
    let mode = CString::new("all").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { oc_search_json(4, f, mode.as_ptr(), &mut s) }, OcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["max_count"], "32");
    assert_eq!(v["extremal_graphs"].as_array().unwrap().len(), 2);
    unsafe { oc_family_free(f) };
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let lib = target_dir().join("liborientcount_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include <string.h>
#include "orientcount.h"
int main(void) {
    OcGraph *g = NULL;
    OcFamily *f = NULL;
    char *count = NULL;
    if (oc_graph_from_graph6("C~", &g) != OC_STATUS_OK) return 1;
    if (oc_family_parse("s4", &f) != OC_STATUS_OK) return 2;
    if (oc_count(g, f, &count) != OC_STATUS_OK) return 3;
    int ok = strcmp(count, "40") == 0;
    oc_string_free(count);
    oc_graph_free(g);
    oc_family_free(f);
    if (oc_graph_from_graph6("B", &g) != OC_STATUS_PARSE) return 4;
    printf("%s\n", oc_last_error());
    return ok ? 0 : 5;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("main");
    let build = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&header)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(build.status.success(), "{}", String::from_utf8_lossy(&build.stderr));
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert!(String::from_utf8_lossy(&run.stdout).contains("graph6"));
}
