//! Compiles a small C program against the generated header and the static
//! library.

use std::path::{Path, PathBuf};
use std::process::Command;

fn static_lib() -> PathBuf {
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    let deps = exe.parent().unwrap();
    [deps.join("libhyperfield_ffi.a"), deps.parent().unwrap().join("libhyperfield_ffi.a")]
        .into_iter()
        .find(|p| p.exists())
        .expect("static library next to the test binary")
}

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "hyperfield.h"

int main(void) {
    HfPoly *p = NULL;
    if (hf_poly_parse("-5,0,1", &p) != HF_STATUS_OK) return 10;
    char *json = NULL;
    if (hf_newton_polygon_json(p, 5, &json) != HF_STATUS_OK) return 11;
    if (strstr(json, "\"slope_den\":2") == NULL) return 12;
    hf_string_free(json);
    if (hf_poly_degree(p) != 2) return 13;
    hf_poly_free(p);
    if (hf_poly_parse("oops", &p) != HF_STATUS_PARSE) return 14;
    if (strlen(hf_last_error()) == 0) return 15;
    uint64_t t = 0;
    if (hf_ev_threshold(100, &t) != HF_STATUS_OK || t != 16342) return 16;
    puts("ok");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let bin = dir.path().join("smoke");
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(static_lib())
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
