"""End-to-end: the CLI as an HTTP client of a live service."""

import json
import threading
import time

import pytest
import uvicorn

from coronares.cli import main
from coronares.service.app import app


@pytest.fixture(scope="module")
def server_url():
    config = uvicorn.Config(app, host="127.0.0.1", port=0, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.time() + 10
    while not server.started:
        if time.time() > deadline:
            raise RuntimeError("uvicorn did not start")
        time.sleep(0.02)
    port = server.servers[0].sockets[0].getsockname()[1]
    yield f"http://127.0.0.1:{port}"
    server.should_exit = True
    thread.join(timeout=5)


def test_cli_against_live_server(server_url, capsys):
    code = main(
        [
            "resist",
            "corona",
            "--g1",
            "C3",
            "--g2",
            "P3",
            "--server",
            server_url,
            "--format",
            "json",
        ]
    )
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert doc["operation"] == "resist corona"
    assert doc["matrix"][0][1] == "2/3"


def test_cli_remote_verify(server_url, capsys):
    code = main(
        ["verify", "ncorona", "--g1", "C4", "--g2", "P2", "--server", server_url]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "ncorona: PASS" in out


def test_cli_remote_domain_error(server_url, capsys):
    code = main(["resist", "--g", "P0", "--server", server_url])
    err = capsys.readouterr().err
    assert code == 1
    assert "server rejected request (400)" in err
    assert "at least one vertex" in err


def test_cli_unreachable_server(capsys):
    code = main(["resist", "--g", "K2", "--server", "http://127.0.0.1:9"])
    err = capsys.readouterr().err
    assert code == 1
    assert "cannot reach" in err
