import math
import os
import random
import subprocess

import pytest

import posmatch


def random_cover(rng, w, h):
    return posmatch.RasterImage.from_rgb(w, h, bytes(rng.randrange(256) for _ in range(w * h * 3)))


def test_encode_matches_ascii_table():
    bits = posmatch.encode_text("HelloWorld")
    assert len(bits) == 70
    assert "".join(map(str, bits[:7])) == "1001000"
    assert posmatch.decode_bits(bits) == "HelloWorld"
    with pytest.raises(posmatch.NonAsciiCharacter):
        posmatch.encode_text("é")


def test_hide_seal_open_extract():
    rng = random.Random(1)
    cover = random_cover(rng, 64, 64)
    positions = posmatch.match_positions(cover, "HelloWorld")
    assert len(positions) == 70
    assert positions == sorted(set(positions))
    assert posmatch.verify_positions(cover, positions, posmatch.encode_text("HelloWorld"))

    sealed = posmatch.seal_positions(positions, "pw", 64, 64, seed=3)
    opened = posmatch.open_positions(sealed, "pw")
    assert opened["positions"] == positions
    assert posmatch.extract_message(cover, opened["positions"]) == "HelloWorld"
    with pytest.raises(posmatch.WrongKey):
        posmatch.open_positions(sealed, b"pW")


def test_metrics_and_baseline():
    rng = random.Random(2)
    cover = random_cover(rng, 16, 16)
    assert posmatch.mse(cover, cover) == 0.0
    assert math.isinf(posmatch.psnr(cover, cover))
    bits = posmatch.encode_text("baseline")
    stego = posmatch.embed_lsb(cover, bits)
    assert posmatch.extract_lsb(stego, len(bits)) == bits
    assert 0 < posmatch.mse(cover, stego) <= len(bits) / cover.sample_count
    assert sum(posmatch.histogram(cover, "G")) == 256
    cap = posmatch.estimate_capacity(64, 64)
    assert (cap.estimated_match_bits, cap.rounded_match_bits, cap.rounded_characters) == (3072, 3000, 420)


def test_ppm_round_trip():
    data = b"P6\n1 1\n255\n" + bytes([255, 0, 10])
    img = posmatch.load_image(data)
    assert img.plane("R") == b"\xff" and img.plane("G") == b"\x00" and img.plane("B") == b"\x0a"
    assert posmatch.encode_ppm(img) == data
    assert posmatch.index_to_location(1, img) == ("G", 0, 0)
    with pytest.raises(posmatch.MalformedImage):
        posmatch.load_image(b"P6\n2 2\n255\n" + bytes(9))


@pytest.mark.skipif("POSMATCH_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_round_trip(tmp_path):
    rng = random.Random(3)
    cover = tmp_path / "cover.ppm"
    cover.write_bytes(posmatch.encode_ppm(random_cover(rng, 32, 32)))
    cli = os.environ["POSMATCH_CLI"]
    env = dict(os.environ, POSMATCH_KEY="python")
    pos = tmp_path / "m.spm"
    subprocess.run([cli, "hide", "-c", str(cover), "-m", "from python", "-o", str(pos)], check=True, env=env)
    out = subprocess.run([cli, "reveal", "-c", str(cover), "-p", str(pos)], check=True, env=env,
                         capture_output=True, text=True)
    assert out.stdout == "from python\n"
    env["POSMATCH_KEY"] = "nope"
    bad = subprocess.run([cli, "reveal", "-c", str(cover), "-p", str(pos)], env=env, capture_output=True,
                         text=True)
    assert bad.returncode == 5
    assert "wrong secret key" in bad.stderr
