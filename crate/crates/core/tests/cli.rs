use std::path::PathBuf;
use std::process::{Command, Output};

fn ulab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ulab")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = ulab(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn padic_golden() {
    assert_eq!(
        stdout(&["padic", "--prime", "7", "--precision", "3", "--rational", "7/1"]),
        "prime,precision,valuation,abs,digits\n7,3,1,7^-1,1 0 0\n"
    );
    assert_eq!(
        stdout(&["padic", "--prime", "3", "--precision", "4", "--rational", "-1/9"]),
        "prime,precision,valuation,abs,digits\n3,4,-2,3^2,2 2 2 2\n"
    );
}

#[test]
fn padic_json_golden() {
    assert_eq!(
        stdout(&["--format", "json", "padic", "--prime", "5", "--precision", "2", "--rational", "1/3"]),
        "[\n  {\n    \"abs\": \"5^0\",\n    \"digits\": [\n      2,\n      3\n    ],\n    \"precision\": 2,\n    \"prime\": 5,\n    \"valuation\": \"0\"\n  }\n]\n"
    );
}

#[test]
fn krasner_table_golden() {
    assert_eq!(
        stdout(&["krasner-table", "--prime", "3", "--max-level", "3"]),
        "level,degree,dist_to_one_exponent,conjugate_gap_exponent,c0_coefficient,c0_exponent,newton_verified\n\
         1,2,1/2,1/2,1/2,1/2,true\n\
         2,6,1/6,1/2,1/2,1/2,true\n\
         3,18,1/18,1/2,1/2,1/2,true\n"
    );
}

#[test]
fn newton_golden_and_svg() {
    let svg = scratch("newton.svg");
    let table = stdout(&["newton", "--prime", "2", "--poly", "8,2,1,1/2", "--svg", svg.to_str().unwrap()]);
    assert_eq!(
        table,
        "record,i,valuation,slope,length,root_valuation\n\
         vertex,0,3,,,\n\
         vertex,1,1,,,\n\
         vertex,3,-1,,,\n\
         segment,0,3,-2,1,2\n\
         segment,1,1,-1,2,1\n"
    );
    let drawn = std::fs::read_to_string(&svg).unwrap();
    assert!(drawn.contains(r#"width="800" height="600""#));
    assert!(drawn.contains("slope -2") && drawn.contains("slope -1"));
    // larger valuations sit higher: (0,3) is above (3,-1)
    assert!(drawn.contains(r#"<polyline points="60,60 287,300 740,540""#), "{drawn}");
}

#[test]
fn lethargy_goldens() {
    let t = stdout(&["lethargy", "regularize", "--eps", "geometric:1/2", "--jump", "linear:1", "--horizon", "8"]);
    assert_eq!(
        t,
        "n,eps_n,xi_n,check1,check2\n\
         1,1/2,1/2,true,true\n\
         2,1/4,1/4,true,true\n\
         3,1/8,1/4,true,true\n\
         4,1/16,1/8,true,true\n\
         5,1/32,1/8,true,true\n\
         6,1/64,1/8,true,true\n\
         7,1/128,1/8,true,true\n\
         8,1/256,1/16,true,true\n"
    );
    let t = stdout(&["lethargy", "dichotomy", "--C", "3", "--kmax", "2", "--smax", "1"]);
    let lines: Vec<&str> = t.lines().collect();
    assert_eq!(lines[..3], ["record,index,lower,upper", "r,0,3,3", "r,1,4,4"]);
    assert_eq!(lines[3], "bound,1,1/2,1/2");
    // 2^{1/log2 3} / 2 = 0.77...
    let parts: Vec<&str> = lines[4].split(',').collect();
    assert_eq!(parts[..2], ["bound", "2"]);
    let dyadic = |s: &str| {
        let (n, d) = s.split_once('/').unwrap();
        let d: u64 = d.parse().unwrap();
        assert!(d.is_power_of_two() && d <= 1 << 20);
        n.parse::<f64>().unwrap() / d as f64
    };
    let (lo, hi) = (dyadic(parts[2]), dyadic(parts[3]));
    let truth = 2f64.powf(1.0 / 3f64.log2()) / 2.0;
    assert!(lo <= truth && truth <= hi && hi - lo < 1e-5);
}

#[test]
fn scheme_goldens() {
    let t = stdout(&["scheme", "model-a", "--prime", "3", "--nmax", "2"]);
    assert_eq!(t, "n,deviation,p_k,ok\n0,3^0,3^-1,true\n1,3^0,3^-1,true\n2,3^0,3^-1,true\n");
    let t = stdout(&["scheme", "witness", "--prime", "2", "--eps", "geometric:1/2", "--horizon", "4"]);
    assert_eq!(
        t,
        "n,eps_n,error_exponent,ratio,ratio_log_floor\n1,1/2,1,1,0\n2,1/4,1,2,1\n3,1/8,2,2,1\n4,1/16,2,4,2\n"
    );
    let t = stdout(&["scheme", "cp-table", "--prime", "3", "--max-level", "2"]);
    assert_eq!(
        t,
        "level,witness,degree,c0,bound,route,bound_holds_below,dist_to_one,conjugate_gap,c0_below_gap,newton_verified,unit_norm_verified\n\
         1,zeta_3,2,1/2*3^-1/2,1/2*3^-1/2,krasner,2,3^-1/2,3^-1/2,true,true,true\n\
         2,zeta_9,6,1/2*3^-1/2,1/2*3^-1/2,krasner,6,3^-1/6,3^-1/2,true,true,true\n"
    );
}

#[test]
fn byte_determinism() {
    for args in [
        &["scheme", "cp-table", "--prime", "2", "--max-level", "5"][..],
        &["--format", "json", "krasner-table", "--prime", "5", "--max-level", "3"][..],
        &["lethargy", "dichotomy", "--C", "5/2", "--kmax", "20"][..],
        &["--format", "json", "scheme", "witness", "--prime", "3", "--eps", "power:2", "--horizon", "30"][..],
    ] {
        assert_eq!(ulab(args).stdout, ulab(args).stdout, "{args:?}");
    }
    let (a, b) = (scratch("a.svg"), scratch("b.svg"));
    for path in [&a, &b] {
        stdout(&["newton", "--prime", "5", "--poly", "25,5,1,1/5", "--svg", path.to_str().unwrap()]);
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("model-a.csv");
    let out = ulab(&["scheme", "model-a", "--prime", "2", "--nmax", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "n,deviation,p_k,ok\n0,2^0,2^-1,true\n1,2^0,2^-1,true\n");
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["padic", "--prime", "4", "--precision", "3", "--rational", "1/2"][..],
        &["padic", "--prime", "5", "--precision", "3", "--rational", "1/0"][..],
        &["padic", "--prime", "5", "--precision", "3", "--rational", "1/2", "--window", "0:9"][..],
        &["newton", "--prime", "3", "--poly", "0"][..],
        &["newton", "--prime", "3", "--poly", "1,,2"][..],
        &["krasner-table", "--prime", "3", "--max-level", "0"][..],
        &["lethargy", "regularize", "--eps", "geometric:3/2", "--jump", "square", "--horizon", "5"][..],
        &["lethargy", "regularize", "--eps", "power:1", "--jump", "table:0", "--horizon", "5"][..],
        &["lethargy", "dichotomy", "--C", "1/2", "--kmax", "5"][..],
        &["scheme", "witness", "--prime", "2", "--eps", "geometric:1/2", "--horizon", "1"][..],
        &["scheme", "cp-table", "--prime", "9", "--max-level", "2"][..],
        &["--format", "yaml", "scheme", "model-a", "--prime", "2", "--nmax", "1"][..],
        &["frobnicate"][..],
        &[][..],
    ] {
        let out = ulab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(ulab(&["--help"]).status.code(), Some(0));
    assert_eq!(ulab(&["lethargy", "--help"]).status.code(), Some(0));
}
