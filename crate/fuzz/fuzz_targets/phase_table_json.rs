//! Phase-table JSON decoding must be total: any byte string either parses
//! into a valid, normalized table or returns an error. Accepted tables are
//! pushed through the separability routines, which must hold their
//! documented ranges on arbitrary accepted input.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qphase::separability::{check_constraints, constraint_list, fit_linear};
use qphase::states::PhaseTable;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(table) = PhaseTable::from_json(text) else {
        return;
    };

    // accepted tables are canonical: 2^n finite phases in [0, 2π)
    let tau = 2.0 * std::f64::consts::PI;
    assert_eq!(table.phases().len(), 1 << table.n());
    for &p in table.phases() {
        assert!(p.is_finite() && (0.0..tau).contains(&p));
    }

    // serialization round-trips bit-exactly
    let json = serde_json::to_string(&table).unwrap();
    assert_eq!(PhaseTable::from_json(&json).unwrap(), table);

    // the decision routines are total and residuals stay on the half-open circle
    assert_eq!(
        constraint_list(table.n()).len(),
        (1usize << table.n()) - (table.n() + 1)
    );
    for (_, residual) in check_constraints(&table, 1e-9) {
        assert!(residual.abs() <= std::f64::consts::PI);
        assert!(residual.abs() > 1e-9);
    }
    if let Some(form) = fit_linear(&table, 1e-9) {
        assert_eq!(form.n(), table.n());
    }
});
