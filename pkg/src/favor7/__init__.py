"""favor7: discovery and certification toolkit for favorable S7-curves of
prime conductor and the amiability pipeline over their pair-resolvents."""

__version__ = "0.1.0"
