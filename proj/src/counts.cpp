namespace gtnl { }
