import threading
import time

import pytest
import uvicorn

from vartani_sidecar import MaskedWordModel, build_tiny_checkpoint, create_app


@pytest.fixture(scope="session")
def checkpoint(tmp_path_factory):
    return build_tiny_checkpoint(str(tmp_path_factory.mktemp("ckpt")))


@pytest.fixture(scope="session")
def model(checkpoint):
    return MaskedWordModel(checkpoint)


@pytest.fixture(scope="session")
def live_server(model):
    """A real uvicorn server on an ephemeral port."""
    app = create_app(model, top_k_cap=50)
    config = uvicorn.Config(app, host="127.0.0.1", port=0, log_level="warning")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.time() + 15
    while not server.started:
        if time.time() > deadline:
            raise RuntimeError("server did not start")
        time.sleep(0.05)
    port = server.servers[0].sockets[0].getsockname()[1]
    yield f"http://127.0.0.1:{port}"
    server.should_exit = True
    thread.join(timeout=10)
