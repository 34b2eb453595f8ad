# Tests for the packing toolkit
