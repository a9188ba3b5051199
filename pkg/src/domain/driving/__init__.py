"""Generic transitionless driving: counterdiabatic terms, moving bases, propagation."""
