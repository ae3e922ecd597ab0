import _scalform

assert _scalform.version() == "0.1.0"
print("python smoke ok")
