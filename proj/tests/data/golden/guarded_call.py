def process_data(data):
    if data is None:
        return
    save(data)
