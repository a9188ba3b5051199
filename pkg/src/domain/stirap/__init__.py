"""Off-resonant three-level STIRAP and its closed-form shortcut."""
