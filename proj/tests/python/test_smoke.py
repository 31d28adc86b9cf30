import v6taxon


def test_canonical_forms():
    assert v6taxon.canonical("2001:0DB8:0:0:0:0:0:1") == "2001:db8::1"
    assert v6taxon.fixed_hex("2001:db8::1") == "20010db8000000000000000000000001"
    assert v6taxon.prefix_of("2001:db8::ffff", 64) == "2001:db8::/64"
    assert v6taxon.contains("2001:db8::/112", "2001:db8::1")


def test_classify():
    fc = v6taxon.classify("2001:db8:0:1cdf:21e:c2ff:fec0:11db")
    assert fc["kind"] == "eui64"
    assert fc["mac"] == "00:1e:c2:c0:11:db"
    assert v6taxon.classify("2002:c000:204::1")["embedded_ipv4"] == "192.0.2.4"
    assert v6taxon.u_bit("2001:db8:0:1cdf:21e:c2ff:fec0:11db") == 1


def test_aggregate_counts_and_mra():
    n = v6taxon.aggregate_counts(["2001:db8::1", "2001:db8::4"])
    assert n[0] == 1 and n[125] == 1 and n[126] == 2 and n[128] == 2
    points = v6taxon.mra_ratios(["2001:db8::1", "2001:db8::4"], 1)
    ratios = {p: r for p, _, _, r in points}
    assert ratios[125] == 2.0 and ratios[0] == 1.0


def test_densify_worked_example():
    addrs = ["2001:db8::1", "2001:db8::4"]
    assert v6taxon.densify(addrs, 2, 112) == [("2001:db8::/112", 2)]
    assert v6taxon.densify(addrs, 2, 125) == [("2001:db8::/125", 2)]
    assert v6taxon.densify(addrs, 2, 126) == []
    assert v6taxon.dense_fixed_length(addrs, 2, 112) == [("2001:db8::/112", 2)]


def test_nd_stable():
    days = {100: ["2001:db8::1"], 102: ["2001:db8::1"]}
    assert v6taxon.nd_stable(days, 100, 2) == ["2001:db8::1"]
    assert v6taxon.nd_stable(days, 100, 3) == []


def test_synth_deterministic():
    a = v6taxon.synth("privacy", seed=9, num_64s=3, per_64=5)
    b = v6taxon.synth("privacy", seed=9, num_64s=3, per_64=5)
    assert a == b and len(a) == 15
