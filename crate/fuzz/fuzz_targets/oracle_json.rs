//! Oracle JSON decoding must be total, and any accepted oracle must run the
//! whole pipeline without panicking: the quantum readout, the promise
//! classification, and both classical strategies.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qphase::dj::{
    classical_decide_general, classical_recover_linear, dj_run, OracleSpec, QueryLog, Verdict,
};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(oracle) = OracleSpec::from_json(text) else {
        return;
    };

    let json = serde_json::to_string(&oracle).unwrap();
    assert_eq!(OracleSpec::from_json(&json).unwrap(), oracle);

    let out = dj_run(&oracle);
    assert!((0.0..=1.0 + 1e-9).contains(&out.prob_zero));
    match out.verdict {
        Verdict::Constant => assert!(out.prob_zero > 1.0 - 1e-9),
        Verdict::Balanced => assert!(out.prob_zero < 1e-9),
        Verdict::Inconclusive => {}
    }

    let mut log = QueryLog::new();
    match classical_decide_general(&oracle, &mut log) {
        Ok(verdict) => {
            // the classical decision agrees with the exact quantum readout
            assert_eq!(verdict, out.verdict);
            assert!(log.count() <= (1 << (oracle.n() - 1)) + 1);
        }
        Err(_) => assert_eq!(log.count(), 0),
    }

    if let Ok((form, log)) = classical_recover_linear(&oracle) {
        assert_eq!(log.count(), oracle.n() + 1);
        assert_eq!(form.n(), oracle.n());
    }
});
