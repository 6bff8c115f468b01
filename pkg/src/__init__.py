"""Root circle splitting types of rational homogeneous varieties."""
