"""Physics core: operators, maser model, dynamics and thermodynamics."""
